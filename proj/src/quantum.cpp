#include "lechain/quantum.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "lechain/correlators.hpp"
#include "lechain/model.hpp"

namespace lechain {

namespace {

constexpr double kStateTol = 1e-12;
constexpr double kPsdSlack = 1e-10;

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

std::array<double, 4> sort_descending(std::array<double, 4> v) {
  std::stable_sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

const Matrix2c& pauli(int mu) {
  static const std::array<Matrix2c, 4> sigma = [] {
    const Complex i(0.0, 1.0);
    std::array<Matrix2c, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -i, i, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  if (mu < 0 || mu > 3) throw std::out_of_range("pauli: index must be 0..3");
  return sigma[mu];
}

const Matrix4c& spin_flip() {
  static const Matrix4c yy = kron(pauli(2), pauli(2));
  return yy;
}

TwoSpinState::TwoSpinState(const Vector4c& amplitudes) : amp_(amplitudes) {
  if (std::abs(amp_.squaredNorm() - 1.0) > kStateTol) throw std::invalid_argument("TwoSpinState: state is not normalized");
}

TwoSpinDensity::TwoSpinDensity(const Matrix4c& rho) : rho_(rho) {
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kStateTol)
    throw std::invalid_argument("TwoSpinDensity: matrix is not Hermitian");
  if (std::abs(rho_.trace() - Complex(1.0, 0.0)) > kStateTol)
    throw std::invalid_argument("TwoSpinDensity: trace is not 1");
  const double lo = min_eigenvalue();
  if (lo < -kPsdSlack) {
    std::ostringstream msg;
    msg << "TwoSpinDensity: not positive semidefinite (min eigenvalue " << lo << ")";
    throw std::domain_error(msg.str());
  }
}

double TwoSpinDensity::pauli_expectation(int mu, int nu) const {
  return (rho_ * kron(pauli(mu), pauli(nu))).trace().real();
}

double TwoSpinDensity::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(rho_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double concurrence_pure(const TwoSpinState& state) {
  const Vector4c& v = state.amplitudes();
  return 2.0 * std::abs(v[0] * v[3] - v[1] * v[2]);
}

TwoSpinDensity density_from_correlators(const CorrelatorTriple& t) {
  if (std::abs(t.gx) > 1.0 || std::abs(t.G) > 1.0 || std::abs(t.sigma) > 1.0)
    throw std::domain_error("density_from_correlators: correlators must lie in [-1, 1]");
  const Matrix2c& id = pauli(0);
  Matrix4c rho = kron(id, id) + t.gx * (kron(pauli(1), pauli(1)) + kron(pauli(2), pauli(2))) +
                 t.G * kron(pauli(3), pauli(3)) + t.sigma * (kron(id, pauli(3)) + kron(pauli(3), id));
  rho *= 0.25;
  return TwoSpinDensity(rho);
}

Matrix4c psd_sqrt(const Matrix4c& m) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(m);
  const Eigen::Vector4d root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

std::array<double, 4> wootters_spectrum(const TwoSpinDensity& density, WoottersRoute route) {
  const Matrix4c& rho = density.matrix();
  std::array<double, 4> out{};
  if (route == WoottersRoute::SpinFlipProduct) {
    // rho = X X^dag makes rho rho~ similar to M^dag M with M = X^T S X, so the lambdas are the
    // singular values of M. Avoids the sqrt of rounding noise on rank-deficient states.
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(rho);
    const Eigen::Vector4d d = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Matrix4c x = es.eigenvectors() * d.asDiagonal();
    const Eigen::Vector4d sv = Eigen::JacobiSVD<Matrix4c>(x.transpose() * spin_flip() * x).singularValues();
    for (int k = 0; k < 4; ++k) out[k] = sv[k];
  } else {
    const Matrix4c rho_tilde = spin_flip() * rho.conjugate() * spin_flip();
    const Matrix4c root = psd_sqrt(rho);
    const Matrix4c m = root * rho_tilde * root;
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    for (int k = 0; k < 4; ++k) out[k] = std::sqrt(std::max(0.0, es.eigenvalues()[k]));
  }
  return sort_descending(out);
}

double concurrence_from_spectrum(const std::array<double, 4>& l) {
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double wootters_concurrence(const TwoSpinDensity& rho, WoottersRoute route) {
  return std::min(1.0, concurrence_from_spectrum(wootters_spectrum(rho, route)));
}

REigenvalues r_eigenvalues_closed(const CorrelatorTriple& t) {
  const double disc = (1.0 + t.G) * (1.0 + t.G) - 4.0 * t.sigma * t.sigma;
  if (disc < 0.0) throw std::domain_error("r_eigenvalues_closed: (1+G)^2 < 4 sigma^2, triple is unphysical");
  const double outer = 0.25 * std::sqrt(disc);
  const double inner = 0.25 * (1.0 - t.G);
  REigenvalues r;
  r.values = {outer, outer, inner + 0.5 * t.gx, inner - 0.5 * t.gx};
  r.sorted = sort_descending(r.values);
  return r;
}

double concurrence_xxx(Separation n) {
  const double g = xxx_zz(n).value;
  // Case I spectrum {(1+g)/4 x3, (1-3g)/4}: the largest depends on the sign of g.
  if (g < 0.0) return std::max(0.0, (-3.0 * g - 1.0) / 4.0);
  return std::max(0.0, -(1.0 - g) / 2.0);
}

double concurrence_field_approx(const CorrelatorTriple& t) {
  const double s2 = t.sigma * t.sigma;
  if (s2 >= 1.0) throw std::domain_error("concurrence_field_approx: |sigma| must be < 1");
  const double gz = t.G - s2;
  return std::max(0.0, std::abs(t.gx) - 0.5 * (1.0 - s2) - 0.5 * gz * (1.0 + s2) / (1.0 - s2));
}

double vanishing_distance_xxz(double eta) {
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("vanishing_distance_xxz: eta must lie in (0, 1)");
  return std::pow(2.0 * amplitude_F(eta), 1.0 / eta);
}

double vanishing_distance_field(double amplitude, double sigma, double theta) {
  if (std::abs(sigma) >= 1.0) throw std::domain_error("vanishing_distance_field: |sigma| must be < 1");
  if (theta < 0.0) throw std::invalid_argument("vanishing_distance_field: theta must be >= 0");
  return std::pow(std::abs(2.0 * amplitude / (1.0 - sigma * sigma)), theta);
}

double le_lower_bound(double qxx, double qyy, double qzz) {
  return std::max({std::abs(qxx), std::abs(qyy), std::abs(qzz)});
}

double le_upper_bound(double qzz_raw, double sigma_i, double sigma_j) {
  auto checked = [](double s) {
    if (s < -1e-12) throw std::domain_error("le_upper_bound: s+- negative, inputs are unphysical");
    return std::max(0.0, s);
  };
  const double sp = checked((1.0 + qzz_raw) * (1.0 + qzz_raw) - (sigma_i + sigma_j) * (sigma_i + sigma_j));
  const double sm = checked((1.0 - qzz_raw) * (1.0 - qzz_raw) - (sigma_i - sigma_j) * (sigma_i - sigma_j));
  return 0.5 * (std::sqrt(sp) + std::sqrt(sm));
}

double assistance_concurrence_from_factor(const Matrix4c& factor) {
  const Matrix4c m = factor.transpose() * spin_flip() * factor;
  Eigen::JacobiSVD<Matrix4c> svd(m);
  return svd.singularValues().sum();
}

double assistance_concurrence(const TwoSpinDensity& rho) {
  return assistance_concurrence_from_factor(psd_sqrt(rho.matrix()));
}

}  // namespace lechain
