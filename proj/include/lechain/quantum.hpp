#pragma once

#include <Eigen/Core>

#include <array>
#include <complex>

#include "lechain/model.hpp"

namespace lechain {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;

/// Pauli matrix by index 0 = I, 1 = x, 2 = y, 3 = z.
const Matrix2c& pauli(int mu);
/// sigma_y (x) sigma_y
const Matrix4c& spin_flip();

/// Normalized two-qubit pure state a|00> + b|01> + c|10> + d|11>.
class TwoSpinState {
 public:
  explicit TwoSpinState(const Vector4c& amplitudes);
  TwoSpinState(Complex a, Complex b, Complex c, Complex d) : TwoSpinState(Vector4c(a, b, c, d)) {}

  const Vector4c& amplitudes() const { return amp_; }
  Matrix4c projector() const { return amp_ * amp_.adjoint(); }

 private:
  Vector4c amp_;
};

/// Two-spin density matrix: Hermitian, unit trace, PSD up to 1e-10.
class TwoSpinDensity {
 public:
  explicit TwoSpinDensity(const Matrix4c& rho);

  const Matrix4c& matrix() const { return rho_; }
  /// tr(rho sigma_mu (x) sigma_nu)
  double pauli_expectation(int mu, int nu) const;
  double min_eigenvalue() const;

 private:
  Matrix4c rho_;
};

/// (g_x, G, sigma): <xx> = <yy>, <zz>, and the on-site <z>.
struct CorrelatorTriple {
  double gx = 0.0;
  double G = 0.0;
  double sigma = 0.0;
};

struct LEBounds {
  double lower = 0.0;
  double upper = 1.0;
};

/// 2|ad - bc|.
double concurrence_pure(const TwoSpinState& state);

/// 1/4 [I + gx (xx + yy) + G zz + sigma (Iz + zI)]; rejects non-PSD triples.
TwoSpinDensity density_from_correlators(const CorrelatorTriple& t);

enum class WoottersRoute {
  /// sqrt of the spectrum of rho * rho~, taken as singular values of X^T S X for rho = X X^dag
  SpinFlipProduct,
  /// spectrum of sqrt(sqrt(rho) rho~ sqrt(rho)); diagnostic cross-check
  SquareRoot,
};

/// Spectrum of R, descending.
std::array<double, 4> wootters_spectrum(const TwoSpinDensity& rho,
                                        WoottersRoute route = WoottersRoute::SpinFlipProduct);
double wootters_concurrence(const TwoSpinDensity& rho, WoottersRoute route = WoottersRoute::SpinFlipProduct);

/// max(0, l1 - l2 - l3 - l4) of a descending spectrum.
double concurrence_from_spectrum(const std::array<double, 4>& descending);

struct REigenvalues {
  /// {sqrt((1+G)^2 - 4 sigma^2)/4 (twice), (1-G)/4 + gx/2, (1-G)/4 - gx/2}
  std::array<double, 4> values;
  std::array<double, 4> sorted;
};

/// Closed-form R spectrum for the U(1)-symmetric two-spin state.
REigenvalues r_eigenvalues_closed(const CorrelatorTriple& t);

/// Pre-measurement XXX concurrence at zero field, from the case-I formula
/// with g the best available <sigma^z sigma^z>.
double concurrence_xxx(Separation n);

/// Small-correlation concurrence in a field:
/// max(0, |gx| - (1 - s^2)/2 - (gz/2)(1 + s^2)/(1 - s^2)), gz = G - s^2.
double concurrence_field_approx(const CorrelatorTriple& t);

/// (2 F(eta))^{1/eta}
double vanishing_distance_xxz(double eta);
/// |2 A_h / (1 - sigma^2)|^theta
double vanishing_distance_field(double amplitude, double sigma, double theta);

/// max_a |Q_aa|
double le_lower_bound(double qxx, double qyy, double qzz);
/// (sqrt(s+) + sqrt(s-))/2, s+- = (1 +- <zz>)^2 - (sigma_i +- sigma_j)^2
double le_upper_bound(double qzz_raw, double sigma_i, double sigma_j);

/// Concurrence of assistance tr|X^T (sigma_y x sigma_y) X| with X = sqrt(rho).
double assistance_concurrence(const TwoSpinDensity& rho);
/// Same quantity from an explicit factor rho = X X^dagger.
double assistance_concurrence_from_factor(const Matrix4c& factor);

/// Principal square root of a PSD matrix (negative eigenvalues clipped to 0).
Matrix4c psd_sqrt(const Matrix4c& m);

}  // namespace lechain
