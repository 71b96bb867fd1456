#include "lechain/field_theory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lechain/numerics.hpp"

namespace lechain {

namespace {
constexpr double pi = std::numbers::pi;

void require_open_unit(double eta, const char* who) {
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument(std::string(who) + ": eta must lie in (0, 1)");
}
}  // namespace

double critical_field(const ChainModel& model) { return saturation_field(model.family, model.eta); }

double susceptibility(double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("susceptibility: eta must lie in (0, 1]");
  if (eta == 1.0) return 1.0 / (pi * pi);
  return (1.0 - eta) / (pi * eta * std::sin(pi * eta));
}

double magnetization_small_field(double eta, double h) { return susceptibility(eta) * h; }

double magnetization_near_critical(const ChainModel& model, double h) {
  const double hc = critical_field(model);
  if (h > hc) throw std::invalid_argument("magnetization_near_critical: field above saturation");
  return std::min(1.0, 1.0 - (2.0 / pi) * std::sqrt(hc - h));
}

double xxx_crossover_field() { return std::sqrt(8.0 * pi * pi * pi / std::numbers::e); }

ThetaEstimate theta_xxx_small_field(double h) {
  if (!(h > 0.0)) throw std::invalid_argument("theta_xxx_small_field: h must be positive");
  const double theta = 1.0 + 1.0 / (2.0 * std::log(xxx_crossover_field() / h));
  return {theta, ThetaRegime::SmallField, make_model(Family::XXX, 1.0, h, FieldRange::AllowSaturated)};
}

ThetaEstimate theta_xxx_near_critical(double h) {
  if (h > 4.0) throw std::invalid_argument("theta_xxx_near_critical: h above h_c = 4");
  if (h < 0.0) throw std::invalid_argument("theta_xxx_near_critical: negative field");
  const double theta = 2.0 * (1.0 - std::sqrt(4.0 - h) / pi);
  return {theta, ThetaRegime::NearCritical, make_model(Family::XXX, 1.0, h)};
}

double alpha1(double eta) {
  if (!(eta > 0.0 && eta < 2.0 / 3.0)) throw std::invalid_argument("alpha1: eta must lie in (0, 2/3)");
  const double s = std::sin(pi * eta);
  return (1.0 - eta) * (1.0 - eta) / (4.0 * pi * eta * std::tan(pi * eta / (2.0 * (1.0 - eta))) * s * s);
}

double beta_coefficient(double eta) {
  require_open_unit(eta, "beta_coefficient");
  return (1.0 - eta) * std::log(1.0 - eta) + eta * std::log(eta);
}

double h0(double eta) {
  require_open_unit(eta, "h0");
  const double one_minus = 1.0 - eta;
  const double log_gamma_ratio =
      log_gamma_fn((3.0 - 2.0 * eta) / (2.0 * one_minus)) - log_gamma_fn((2.0 - eta) / (2.0 * one_minus));
  return 4.0 * eta * std::sqrt(pi) * std::sin(pi * eta) / one_minus *
         std::exp(beta_coefficient(eta) / (2.0 * one_minus) + log_gamma_ratio);
}

double alpha2(double eta) {
  if (!(eta > 2.0 / 3.0 && eta < 1.0)) throw std::invalid_argument("alpha2: eta must lie in (2/3, 1)");
  const double inv = 1.0 / eta;
  const double log_gamma_ratio = log_gamma_fn(1.0 + inv) - log_gamma_fn(0.5 + inv);
  const double log_h0_power = 4.0 * (1.0 - inv) * std::log(h0(eta));
  return 2.0 * eta * std::tan(pi * inv) *
         std::exp(2.0 * beta_coefficient(eta) * inv + log_h0_power + 2.0 * log_gamma_ratio);
}

ThetaEstimate theta_xxz_small_field(double eta, double h) {
  require_open_unit(eta, "theta_xxz_small_field");
  if (h < 0.0) throw std::invalid_argument("theta_xxz_small_field: negative field");
  const ChainModel model = make_model(Family::XXZ, eta, h, FieldRange::AllowSaturated);
  if (h == 0.0) return {1.0 / eta, ThetaRegime::SmallField, model};
  double correction = 0.0;
  if (eta < 2.0 / 3.0) {
    correction = alpha1(eta) * h * h;
  } else if (eta > 2.0 / 3.0) {
    correction = alpha2(eta) * std::pow(h, 4.0 * (1.0 / eta - 1.0));
  } else {
    throw std::domain_error("theta_xxz_small_field: expansion coefficient is singular at eta = 2/3");
  }
  return {(1.0 + correction) / eta, ThetaRegime::SmallField, model};
}

ThetaEstimate theta_xxz_near_critical(double eta, double h) {
  require_open_unit(eta, "theta_xxz_near_critical");
  const double hc = saturation_field(Family::XXZ, eta);
  if (h > hc) throw std::invalid_argument("theta_xxz_near_critical: field above saturation");
  if (h < 0.0) throw std::invalid_argument("theta_xxz_near_critical: negative field");
  const ChainModel model = make_model(Family::XXZ, eta, h);
  // tan(pi eta/2) tan(pi eta) diverges at eta = 1/2, where the correction vanishes.
  if (std::abs(std::cos(pi * eta)) < 1e-12) return {2.0, ThetaRegime::NearCritical, model, true};
  const double denom = pi * std::tan(pi * eta / 2.0) * std::tan(pi * eta);
  return {2.0 + 4.0 * std::sqrt(hc - h) / denom, ThetaRegime::NearCritical, model};
}

const char* to_string(ThetaRegime regime) {
  switch (regime) {
    case ThetaRegime::SmallField: return "SMALL_FIELD";
    case ThetaRegime::NearCritical: return "NEAR_CRITICAL";
    case ThetaRegime::Exact: return "EXACT";
  }
  return "?";
}

}  // namespace lechain
