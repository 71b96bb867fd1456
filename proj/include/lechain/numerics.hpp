#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "lechain/model.hpp"

namespace lechain {

enum class Constant { Ln2, EulerGamma, Zeta3, Zeta5, Zeta7 };

/// Mathematical constants to full double precision.
double constant(Constant name);

/// Gamma function for x > 0, relative error near machine precision.
double gamma_fn(double x);
/// log Gamma(x) for x > 0.
double log_gamma_fn(double x);

/// Raised by find_root when f(lo) and f(hi) have the same sign.
class BracketError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename Scalar = double>
struct QuadratureRule {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> nodes;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights;
  int order = 0;

  template <typename F>
  Scalar apply(F&& f) const {
    Scalar sum(0);
    for (int k = 0; k < order; ++k) sum += weights[k] * f(nodes[k]);
    return sum;
  }
};

/// Gauss-Legendre rule with `order` nodes on [a, b]; nodes ascending.
///
/// Roots of P_n are polished by Newton iteration from the Tricomi initial
/// guess; weights use 2 / ((1 - x^2) P_n'(x)^2).
template <typename Scalar = double>
QuadratureRule<Scalar> gauss_legendre(int order, Scalar a, Scalar b) {
  if (order < 2) throw std::invalid_argument("gauss_legendre: order must be >= 2");
  if (!(a < b)) throw std::invalid_argument("gauss_legendre: degenerate interval");
  using std::abs;
  using std::cos;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar half_width = (b - a) / 2;
  const Scalar mid = (a + b) / 2;
  QuadratureRule<Scalar> rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    Scalar x = cos(pi * (Scalar(i) + Scalar(0.75)) / (Scalar(order) + Scalar(0.5)));
    Scalar dp(0);
    for (int iter = 0; iter < 100; ++iter) {
      Scalar p0(1), p1 = x;
      for (int k = 2; k <= order; ++k) {
        Scalar p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1);
      const Scalar dx = p1 / dp;
      x -= dx;
      if (abs(dx) <= std::numeric_limits<Scalar>::epsilon() * 4) {
        // one more pass so dp matches the final x
        p0 = 1;
        p1 = x;
        for (int k = 2; k <= order; ++k) {
          Scalar p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = order * (x * p1 - p0) / (x * x - 1);
        break;
      }
    }
    const Scalar w = 2 / ((1 - x * x) * dp * dp);
    // x is the i-th largest root; store symmetric pair in ascending order.
    rule.nodes[order - 1 - i] = mid + half_width * x;
    rule.nodes[i] = mid - half_width * x;
    rule.weights[order - 1 - i] = half_width * w;
    rule.weights[i] = half_width * w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = mid;
  return rule;
}

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

/// Integral of f over [0, inf) for integrands with a finite t -> 0 limit and
/// exponential decay.
///
/// Geometric panels [0,1], [1,2], [2,4], ... each integrated with an
/// order-n and order-2n Gauss-Legendre pair; a panel whose two estimates
/// disagree by more than its share of `tol` is bisected. Summation stops once
/// two consecutive panels contribute less than tol/10. Throws NonConvergence
/// if the panel budget runs out.
template <typename F>
IntegrationResult integrate_semi_infinite(F&& f, double tol, int order = 32, int max_panels = 4000) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_semi_infinite: tol must be positive");
  const auto coarse = gauss_legendre<double>(order, -1.0, 1.0);
  const auto fine = gauss_legendre<double>(2 * order, -1.0, 1.0);
  IntegrationResult out;

  auto on_panel = [&](const QuadratureRule<double>& rule, double a, double b) {
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    double s = 0.0;
    for (int k = 0; k < rule.order; ++k) s += rule.weights[k] * f(c + r * rule.nodes[k]);
    return r * s;
  };

  // Per-panel local tolerance; the geometric sequence of panels keeps the sum bounded.
  const double panel_tol = tol / 64.0;
  auto adaptive = [&](auto&& self, double a, double b, int depth) -> std::pair<double, double> {
    if (++out.panels > max_panels) throw NonConvergence("integrate_semi_infinite: panel budget exhausted");
    const double q1 = on_panel(coarse, a, b);
    const double q2 = on_panel(fine, a, b);
    const double err = std::abs(q2 - q1);
    if (err <= panel_tol || depth >= 30) return {q2, err};
    const double m = 0.5 * (a + b);
    auto left = self(self, a, m, depth + 1);
    auto right = self(self, m, b, depth + 1);
    return {left.first + right.first, left.second + right.second};
  };

  double a = 0.0, b = 1.0;
  int small_run = 0;
  while (true) {
    auto [q, err] = adaptive(adaptive, a, b, 0);
    out.value += q;
    out.error_estimate += err;
    if (std::abs(q) < tol / 10.0 && b >= 8.0) {
      if (++small_run >= 2) {
        out.error_estimate += std::abs(q);  // tail estimate
        break;
      }
    } else {
      small_run = 0;
    }
    a = b;
    b = (b < 2.0) ? 2.0 : 2.0 * b;
    if (!std::isfinite(b) || out.panels > max_panels)
      throw NonConvergence("integrate_semi_infinite: no decay detected");
  }
  if (!(out.error_estimate <= tol))
    throw NonConvergence("integrate_semi_infinite: error estimate above tolerance");
  return out;
}

/// Root of a continuous f on [lo, hi] with f(lo) f(hi) <= 0.
///
/// Illinois (modified regula falsi) with a bisection step whenever the
/// bracket fails to halve. Returns x in [lo, hi] with |f(x)| <= tol or
/// bracket width <= tol.
template <typename F>
double find_root(F&& f, double lo, double hi, double tol, int max_iter = 400) {
  if (!(lo <= hi)) throw std::invalid_argument("find_root: lo > hi");
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) throw BracketError("find_root: no sign change in bracket");
  int side = 0;
  double width = hi - lo;
  for (int iter = 0; iter < max_iter; ++iter) {
    double x = (lo * fhi - hi * flo) / (fhi - flo);
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    const double fx = f(x);
    if (std::abs(fx) <= tol) return x;
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
      if (side == -1) fhi *= 0.5;
      side = -1;
    } else {
      hi = x;
      fhi = fx;
      if (side == +1) flo *= 0.5;
      side = +1;
    }
    if (hi - lo <= tol) return std::abs(flo) < std::abs(fhi) ? lo : hi;
    // Force progress when regula falsi stalls on one side.
    if (iter % 2 == 1) {
      if (hi - lo > 0.5 * width) {
        const double m = 0.5 * (lo + hi);
        const double fm = f(m);
        if (std::abs(fm) <= tol) return m;
        if (std::signbit(fm) == std::signbit(flo)) {
          lo = m;
          flo = fm;
        } else {
          hi = m;
          fhi = fm;
        }
        side = 0;
      }
      width = hi - lo;
    }
  }
  return std::abs(flo) < std::abs(fhi) ? lo : hi;
}

}  // namespace lechain
