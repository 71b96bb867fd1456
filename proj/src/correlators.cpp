#include "lechain/correlators.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>

#include "lechain/numerics.hpp"

namespace lechain {

namespace {

constexpr double pi = std::numbers::pi;

// Monomial coefficient num/den * ln2^a zeta3^b zeta5^c zeta7^d.
struct Term {
  long num;
  long den;
  int ln2, z3, z5, z7;
};

constexpr std::array<Term, 2> kNearest{{
    {1, 3, 0, 0, 0, 0},
    {-4, 3, 1, 0, 0, 0},
}};

constexpr std::array<Term, 3> kSecond{{
    {1, 3, 0, 0, 0, 0},
    {-16, 3, 1, 0, 0, 0},
    {3, 1, 0, 1, 0, 0},
}};

constexpr std::array<Term, 7> kThird{{
    {1, 3, 0, 0, 0, 0},
    {-12, 1, 1, 0, 0, 0},
    {74, 3, 0, 1, 0, 0},
    {-56, 3, 1, 1, 0, 0},
    {-6, 1, 0, 2, 0, 0},
    {-125, 6, 0, 0, 1, 0},
    {100, 3, 1, 0, 1, 0},
}};

constexpr std::array<Term, 12> kFourth{{
    {1, 12, 0, 0, 0, 0},
    {-16, 3, 1, 0, 0, 0},
    {-54, 1, 1, 1, 0, 0},
    {-293, 4, 0, 2, 0, 0},
    {-875, 12, 0, 0, 1, 0},
    {145, 6, 0, 1, 0, 0},
    {1450, 3, 1, 0, 1, 0},
    {-275, 16, 0, 1, 1, 0},
    {-1875, 16, 0, 0, 2, 0},
    {3185, 64, 0, 0, 0, 1},
    {-1715, 4, 1, 0, 0, 1},
    {6615, 32, 0, 1, 0, 1},
}};

double evaluate(std::span<const Term> terms) {
  const double l = constant(Constant::Ln2);
  const double z3 = constant(Constant::Zeta3);
  const double z5 = constant(Constant::Zeta5);
  const double z7 = constant(Constant::Zeta7);
  long double sum = 0.0L;
  for (const Term& t : terms) {
    if (t.num == 0) continue;
    long double mono = std::pow((long double)l, t.ln2) * std::pow((long double)z3, t.z3) *
                       std::pow((long double)z5, t.z5) * std::pow((long double)z7, t.z7);
    sum += (static_cast<long double>(t.num) * mono) / static_cast<long double>(t.den);
  }
  return static_cast<double>(sum);
}

void require_xxz_zero_field(const ChainModel& model, const char* who) {
  if (model.family != Family::XXZ) throw std::invalid_argument(std::string(who) + ": requires an XXZ model");
  if (model.h != 0.0) throw std::invalid_argument(std::string(who) + ": requires zero field");
}

}  // namespace

CorrelatorValue xxx_exact_zz(Separation n) {
  double v = 0.0;
  switch (n.value()) {
    case 1: v = evaluate(kNearest); break;
    case 2: v = evaluate(kSecond); break;
    case 3: v = evaluate(kThird); break;
    case 4: v = evaluate(kFourth); break;
    default: throw std::invalid_argument("xxx_exact_zz: closed forms exist only for n = 1..4");
  }
  return {n, Axis::ZZ, v, CorrelatorKind::Exact};
}

CorrelatorValue xxx_asymptotic_zz(Separation n) {
  const double d = static_cast<double>(n.value());
  const double magnitude = std::sqrt(2.0 * std::log(d)) / (std::pow(pi, 1.5) * d);
  return {n, Axis::ZZ, n.parity() * magnitude, CorrelatorKind::Asymptotic};
}

CorrelatorValue xxx_zz(Separation n) {
  if (n.value() <= 4) return xxx_exact_zz(n);
  return {n, Axis::ZZ, n.parity() * lukyanov_le_lower(n), CorrelatorKind::Series};
}

LukyanovCoupling lukyanov_g(Separation n, double c) {
  const double rhs = std::log(2.0 * std::sqrt(2.0 * pi) * static_cast<double>(n.value())) +
                     constant(Constant::EulerGamma) + c;
  // 1/g + ln(g)/2 is strictly decreasing on (0, 2).
  auto f = [rhs](double g) { return 1.0 / g + 0.5 * std::log(g) - rhs; };
  const double lo = 1e-3 / (1.0 + std::abs(rhs));
  const double hi = 2.0;
  double g = 0.0;
  try {
    g = find_root(f, lo, hi, 1e-15);
  } catch (const BracketError&) {
    throw std::domain_error("lukyanov_g: no coupling in (0, 2) for this n and c");
  }
  // Newton polish on the smooth map; keeps the residual at rounding level.
  for (int k = 0; k < 3; ++k) {
    const double df = -1.0 / (g * g) + 0.5 / g;
    const double step = f(g) / df;
    if (g - step > 0.0) g -= step;
  }
  return {n, c, g, std::abs(f(g))};
}

double lukyanov_le_lower(Separation n, double c) {
  if (n.value() < 2) throw std::invalid_argument("lukyanov_le_lower: series needs n >= 2");
  const double g = lukyanov_g(n, c).g;
  const double d = static_cast<double>(n.value());
  const double z3 = constant(Constant::Zeta3);

  const double a1 = 3.0 / 8.0 - c / 2.0;
  const double a2 = 5.0 / 128.0 - c / 16.0 - c * c / 8.0;
  const double a3 = 21.0 / 1024.0 + 7.0 * c / 256.0 - 7.0 * c * c / 64.0 - c * c * c / 16.0 + 13.0 * z3 / 32.0;
  const double staggered = std::sqrt(2.0 / (pi * pi * pi)) / (d * std::sqrt(g)) * (1.0 + g * (a1 + g * (a2 + g * a3)));

  const double b1 = 0.5;
  const double b2 = (c + 0.75) / 2.0;
  const double b3 = c * (c + 2.0) / 2.0;
  const double smooth = n.parity() / (pi * pi * d * d) * (1.0 + g * (b1 + g * (b2 + g * b3)));
  return staggered - smooth;
}

double amplitude_F_integrand(double eta, double t) {
  if (t == 0.0) return 2.0 * eta;
  // sinh(eta t) / (sinh t cosh((1-eta) t)) in overflow-free form.
  const double ratio = 2.0 * std::exp(-2.0 * (1.0 - eta) * t) * (-std::expm1(-2.0 * eta * t)) /
                       ((-std::expm1(-2.0 * t)) * (1.0 + std::exp(-2.0 * (1.0 - eta) * t)));
  return (ratio - eta * std::exp(-2.0 * t)) / t;
}

double amplitude_F(double eta, int panel_order) {
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("amplitude_F: eta must lie in (0, 1)");
  const double a = eta / (2.0 - 2.0 * eta);
  // Gamma(a) / Gamma(a + 1/2) since 1/(2-2eta) = a + 1/2.
  const double log_gamma_ratio = log_gamma_fn(a) - log_gamma_fn(a + 0.5);
  const double log_bracket = log_gamma_ratio - std::log(2.0 * std::sqrt(pi));
  const auto integral =
      integrate_semi_infinite([eta](double t) { return amplitude_F_integrand(eta, t); }, 1e-13, panel_order);
  const double log_f = -std::log(2.0 * (1.0 - eta) * (1.0 - eta)) + eta * log_bracket - integral.value;
  return std::exp(log_f);
}

CorrelatorValue xxz_xx_asymptotic(const ChainModel& model, Separation n) {
  require_xxz_zero_field(model, "xxz_xx_asymptotic");
  const double v = amplitude_F(model.eta) * std::pow(static_cast<double>(n.value()), -model.eta);
  return {n, Axis::XX, v, CorrelatorKind::Asymptotic};
}

CorrelatorValue xxz_zz_asymptotic(const ChainModel& model, Separation n, std::optional<double> alternating_amplitude) {
  require_xxz_zero_field(model, "xxz_zz_asymptotic");
  const double d = static_cast<double>(n.value());
  double v = -1.0 / (pi * pi * model.eta * d * d);
  if (alternating_amplitude) v += *alternating_amplitude * n.parity() * std::pow(d, -1.0 / model.eta);
  return {n, Axis::ZZ, v, CorrelatorKind::Asymptotic};
}

const char* to_string(CorrelatorKind kind) {
  switch (kind) {
    case CorrelatorKind::Exact: return "EXACT";
    case CorrelatorKind::Asymptotic: return "ASYMPTOTIC";
    case CorrelatorKind::Series: return "SERIES";
  }
  return "?";
}

}  // namespace lechain
