#pragma once

#include "lechain/model.hpp"

namespace lechain {

enum class ThetaRegime { SmallField, NearCritical, Exact };

/// Critical exponent of the oscillating <sigma^z sigma^z> part in a field.
struct ThetaEstimate {
  double theta;
  ThetaRegime regime;
  ChainModel model;
  /// Set when the correction term has a divergent denominator and was dropped.
  bool degenerate_denominator = false;
};

double critical_field(const ChainModel& model);

/// Zero-field susceptibility chi(eta) = (1-eta)/(pi eta sin pi eta); 1/pi^2 at eta = 1.
double susceptibility(double eta);

/// sigma_z = chi(eta) h.
double magnetization_small_field(double eta, double h);

/// sigma_z = 1 - (2/pi) sqrt(h_c - h), capped at 1.
double magnetization_near_critical(const ChainModel& model, double h);

/// Crossover field sqrt(8 pi^3 / e) of the XXX small-field expansion.
double xxx_crossover_field();

ThetaEstimate theta_xxx_small_field(double h);
ThetaEstimate theta_xxx_near_critical(double h);

/// (1/eta)(1 + alpha1 h^2) for eta < 2/3, (1/eta)(1 + alpha2 h^{4(1/eta - 1)}) for eta > 2/3.
ThetaEstimate theta_xxz_small_field(double eta, double h);
ThetaEstimate theta_xxz_near_critical(double eta, double h);

double alpha1(double eta);
double alpha2(double eta);
/// (1-eta) ln(1-eta) + eta ln(eta)
double beta_coefficient(double eta);
double h0(double eta);

const char* to_string(ThetaRegime regime);

}  // namespace lechain
