#include "lechain/le_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace lechain {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kNegligible = 1e-14;

// Plain complex product; operator* pays for inf/nan recovery in the hot loops.
inline Complex mul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

// State reordered so that index = r * 4 + (2 a + b), with a, b the marked
// spins and bit k of r the k-th assisting site.
class PairFrame {
 public:
  PairFrame(const Eigen::VectorXcd& state, int n, int i, int j) : n_(n), sites_(assisting_sites(n, i, j)) {
    if (state.size() != (Eigen::Index{1} << n)) throw std::invalid_argument("state dimension does not match n_sites");
    if (n - 2 > 12) throw std::invalid_argument("at most 12 assisting sites are supported");
    reordered_.resize(state.size());
    for (unsigned b = 0; b < static_cast<unsigned>(state.size()); ++b) {
      unsigned r = 0;
      for (std::size_t k = 0; k < sites_.size(); ++k) r |= ((b >> sites_[k]) & 1u) << k;
      const unsigned ab = (((b >> i) & 1u) << 1) | ((b >> j) & 1u);
      reordered_[r * 4 + ab] = state[b];
    }
  }

  std::size_t assisting() const { return sites_.size(); }

  /// Unnormalized pair amplitudes for every outcome: index = outcome * 4 + ab.
  const Eigen::VectorXcd& contract(const MeasurementPlan& plan) const {
    check(plan);
    work_ = reordered_;
    return contract_steps(plan, sites_.size(), work_);
  }

  /// Caches the contraction of every site above `site`, which a line search
  /// along one of that site's angles leaves unchanged.
  void freeze_above(const MeasurementPlan& plan, std::size_t site) const {
    check(plan);
    frozen_ = reordered_;
    contract_steps(plan, sites_.size(), frozen_, site + 1);
    frozen_site_ = site;
  }

  /// Objective with only the frozen site and those below it recontracted.
  double average_concurrence_frozen(const MeasurementPlan& plan) const {
    work_ = frozen_;
    return objective(contract_steps(plan, frozen_site_ + 1, work_));
  }

  double average_concurrence(const MeasurementPlan& plan) const { return objective(contract(plan)); }

 private:
  void check(const MeasurementPlan& plan) const {
    if (plan.size() != sites_.size() || plan.azimuth.size() != sites_.size())
      throw std::invalid_argument("measurement plan does not cover the assisting sites");
  }

  static double objective(const Eigen::VectorXcd& amp) {
    double sum = 0.0;
    for (Eigen::Index s = 0; s < amp.size(); s += 4) {
      const Complex d = mul(amp[s], amp[s + 3]) - mul(amp[s + 1], amp[s + 2]);
      sum += 2.0 * std::sqrt(d.real() * d.real() + d.imag() * d.imag());
    }
    return sum;
  }

  // Contracts sites top-1 down to stop, in place. Each step splits every
  // block in two halves, the lower holding outcome 0.
  const Eigen::VectorXcd& contract_steps(const MeasurementPlan& plan, std::size_t top, Eigen::VectorXcd& buf,
                                         std::size_t stop = 0) const {
    scratch_.resize(buf.size());
    const Eigen::Index total = buf.size();
    Eigen::Index block = Eigen::Index{4} << top;
    for (std::size_t step = top; step-- > stop;) {
      const double t = plan.polar[step], p = plan.azimuth[step];
      const double c = std::cos(0.5 * t), s = std::sin(0.5 * t);
      const Complex phase = std::polar(1.0, p);
      // Conjugated basis vectors <u| and <u'|.
      const Complex u0 = c, u1 = std::conj(phase) * s;
      const Complex v0 = -phase * s, v1 = c;
      const Eigen::Index half = block / 2;
      for (Eigen::Index base = 0; base < total; base += block) {
        for (Eigen::Index x = 0; x < half; ++x) {
          const Complex lo = buf[base + x], hi = buf[base + half + x];
          scratch_[base + x] = mul(u0, lo) + mul(u1, hi);
          scratch_[base + half + x] = mul(v0, lo) + mul(v1, hi);
        }
      }
      buf.swap(scratch_);
      block = half;
    }
    return buf;
  }

  int n_;
  std::vector<int> sites_;
  Eigen::VectorXcd reordered_;
  mutable Eigen::VectorXcd work_, scratch_, frozen_;
  mutable std::size_t frozen_site_ = 0;
};

// Outcome bit ordering produced by PairFrame::contract: the last assisting
// site is contracted first and becomes the most significant bit, so bit k of
// the outcome index is the k-th assisting site.

struct Coordinate {
  std::size_t site;
  bool polar;
};

double& coordinate(MeasurementPlan& plan, const Coordinate& c) {
  return c.polar ? plan.polar[c.site] : plan.azimuth[c.site];
}

double wrap_azimuth(double p) {
  p = std::fmod(p, 2.0 * pi);
  return p < 0.0 ? p + 2.0 * pi : p;
}

// Maximizes the objective along one angle: coarse scan, then golden section
// around the best scan point.
double line_search(const PairFrame& frame, MeasurementPlan& plan, const Coordinate& c, double current) {
  constexpr int kScan = 16;
  const double span = c.polar ? pi : 2.0 * pi;
  double& x = coordinate(plan, c);
  const double x0 = x;
  frame.freeze_above(plan, c.site);
  double best_x = x0, best_f = current;
  const double step = span / kScan;
  for (int k = 0; k < kScan; ++k) {
    x = c.polar ? k * step + 0.5 * step : wrap_azimuth(x0 + k * step);
    const double f = frame.average_concurrence_frozen(plan);
    if (f > best_f) {
      best_f = f;
      best_x = x;
    }
  }
  double a = best_x - step, b = best_x + step;
  if (c.polar) {
    a = std::max(0.0, a);
    b = std::min(pi, b);
  }
  auto eval = [&](double v) {
    x = c.polar ? v : wrap_azimuth(v);
    return frame.average_concurrence_frozen(plan);
  };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = eval(x1), f2 = eval(x2);
  while (b - a > 1e-5) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = eval(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = eval(x1);
    }
  }
  if (f1 > best_f) {
    best_f = f1;
    best_x = x1;
  }
  if (f2 > best_f) {
    best_f = f2;
    best_x = x2;
  }
  x = c.polar ? best_x : wrap_azimuth(best_x);
  return best_f;
}

// Additive-recurrence low-discrepancy point set in [0,1)^d.
class KroneckerSequence {
 public:
  KroneckerSequence(std::size_t dim, std::uint64_t seed) : alpha_(dim), offset_(dim) {
    double phi = 2.0;
    for (int k = 0; k < 64; ++k) phi = std::pow(1.0 + phi, 1.0 / static_cast<double>(dim + 1));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t k = 0; k < dim; ++k) {
      alpha_[k] = std::pow(1.0 / phi, static_cast<double>(k + 1));
      offset_[k] = unit(rng);
    }
  }

  std::vector<double> point(std::size_t index) const {
    std::vector<double> out(alpha_.size());
    for (std::size_t k = 0; k < alpha_.size(); ++k) {
      const double v = offset_[k] + static_cast<double>(index + 1) * alpha_[k];
      out[k] = v - std::floor(v);
    }
    return out;
  }

 private:
  std::vector<double> alpha_, offset_;
};

}  // namespace

MeasurementPlan MeasurementPlan::uniform(std::size_t sites, double polar, double azimuth) {
  return {std::vector<double>(sites, polar), std::vector<double>(sites, azimuth)};
}

double OutcomeEnsemble::total_probability() const {
  double sum = 0.0;
  for (const auto& o : outcomes) sum += o.probability;
  return sum;
}

Matrix4c OutcomeEnsemble::mixture() const {
  Matrix4c m = Matrix4c::Zero();
  for (const auto& o : outcomes)
    if (o.state) m += o.probability * o.state->projector();
  return m;
}

std::vector<int> assisting_sites(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw std::invalid_argument("marked pair out of range");
  std::vector<int> out;
  for (int k = 0; k < n; ++k)
    if (k != i && k != j) out.push_back(k);
  return out;
}

OutcomeEnsemble enumerate_outcomes(const Eigen::VectorXcd& state, int n, const MeasurementPlan& plan, int i, int j) {
  const PairFrame frame(state, n, i, j);
  const auto& amp = frame.contract(plan);
  OutcomeEnsemble ens;
  ens.outcomes.reserve(static_cast<std::size_t>(amp.size() / 4));
  for (Eigen::Index s = 0; s < amp.size() / 4; ++s) {
    const Vector4c v = amp.segment<4>(4 * s);
    Outcome o;
    o.bits = static_cast<unsigned>(s);
    o.probability = v.squaredNorm();
    if (o.probability >= kNegligible) o.state = TwoSpinState(v / std::sqrt(o.probability));
    ens.outcomes.push_back(std::move(o));
  }
  return ens;
}

double average_concurrence(const OutcomeEnsemble& ensemble) {
  double sum = 0.0;
  for (const auto& o : ensemble.outcomes)
    if (o.state) sum += o.probability * concurrence_pure(*o.state);
  return sum;
}

LEResult optimize_le(const Eigen::VectorXcd& state, int n, int i, int j, const LESearchOptions& options) {
  if (options.restarts < 1) throw std::invalid_argument("optimize_le: restarts must be >= 1");
  const PairFrame frame(state, n, i, j);
  const std::size_t m = frame.assisting();

  std::vector<Coordinate> coords;
  for (std::size_t k = 0; k < m; ++k) {
    coords.push_back({k, true});
    coords.push_back({k, false});
  }

  LEResult result;
  std::vector<double> finals;
  const KroneckerSequence starts(2 * m, options.seed);
  for (int r = 0; r < options.restarts; ++r) {
    const auto u = starts.point(static_cast<std::size_t>(r));
    MeasurementPlan plan = MeasurementPlan::uniform(m, 0.0, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
      plan.polar[k] = pi * u[2 * k];
      plan.azimuth[k] = 2.0 * pi * u[2 * k + 1];
    }
    double value = frame.average_concurrence(plan);
    for (int cycle = 0; cycle < 200 && !coords.empty(); ++cycle) {
      const double before = value;
      for (const auto& c : coords) value = line_search(frame, plan, c, value);
      if (value - before < options.tol) break;
    }
    finals.push_back(value);
    if (r == 0 || value > result.value) {
      result.value = value;
      result.plan = plan;
    }
    result.best_history.push_back(result.value);
    ++result.restarts_used;
  }
  std::sort(finals.begin(), finals.end(), std::greater<>());
  result.converged = finals.size() < 2 || finals[0] - finals[1] <= options.tol;
  return result;
}

}  // namespace lechain
