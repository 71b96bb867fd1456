#pragma once

#include <optional>

#include "lechain/model.hpp"

namespace lechain {

enum class Axis { XX, ZZ };
enum class CorrelatorKind { Exact, Asymptotic, Series };

/// Ground-state two-point function <sigma_a^(i) sigma_a^(j)> at separation n.
struct CorrelatorValue {
  Separation n;
  Axis axis;
  double value;
  CorrelatorKind kind;
};

/// Exact XXX zero-field <sigma^z sigma^z> for n = 1..4 from the ln 2 / zeta(odd)
/// polynomials.
///
/// The n = 4 polynomial is kept in its tabulated normalization, which is that
/// of spin operators S = sigma/2; the Pauli correlator is four times the
/// returned value (0.1386111...).
CorrelatorValue xxx_exact_zz(Separation n);

/// Leading XXX asymptotic (-1)^n sqrt(2 ln n) / (pi^{3/2} n).
CorrelatorValue xxx_asymptotic_zz(Separation n);

/// XXX <sigma^z sigma^z> with EXACT for n <= 4 and the log-corrected series
/// (sign (-1)^n times lukyanov_le_lower) beyond.
CorrelatorValue xxx_zz(Separation n);

/// Running coupling g(n) defined by sqrt(g) e^{1/g} = 2 sqrt(2 pi) e^{gamma_E + c} n.
struct LukyanovCoupling {
  Separation n;
  double c;
  double g;
  /// |1/g + ln(g)/2 - ln(rhs)|, i.e. the relative residual of the defining relation.
  double residual;
};

LukyanovCoupling lukyanov_g(Separation n, double c = -1.0);

/// Log-corrected lower bound on the XXX localizable entanglement, truncated at
/// O(g^3) in both brackets.
double lukyanov_le_lower(Separation n, double c = -1.0);

/// Transverse-correlator amplitude F(eta) of the critical XXZ chain.
///
/// `panel_order` is the Gauss-Legendre order per panel of the t-integral;
/// raising it is the convergence check.
double amplitude_F(double eta, int panel_order = 32);

/// Integrand of the exponent in F, finite at t -> 0 (limit 2 eta).
double amplitude_F_integrand(double eta, double t);

/// F(eta) n^{-eta}. Not bounded by 1 at short distance when eta -> 1.
CorrelatorValue xxz_xx_asymptotic(const ChainModel& model, Separation n);

/// -1/(pi^2 eta n^2) + A (-1)^n n^{-1/eta}; only the smooth part when A is absent.
CorrelatorValue xxz_zz_asymptotic(const ChainModel& model, Separation n,
                                  std::optional<double> alternating_amplitude = std::nullopt);

const char* to_string(CorrelatorKind kind);

}  // namespace lechain
