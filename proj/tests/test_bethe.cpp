#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "lechain/bethe.hpp"
#include "lechain/field_theory.hpp"

using namespace lechain;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST(Kernel, SymmetricAndMatchesComplexForm) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-6.0, 6.0), e(0.02, 0.98);
  const KernelSpec xxx = kernel_spec(xxx_model());
  for (int k = 0; k < 10000; ++k) {
    const double a = u(rng), b = u(rng), eta = e(rng);
    const KernelSpec xxz = kernel_spec(xxz_model(eta));
    EXPECT_EQ(xxx(a, b), xxx(b, a));
    EXPECT_EQ(xxz(a, b), xxz(b, a));
    EXPECT_NEAR(xxx(a, b), -2.0 / (1.0 + (a - b) * (a - b)), 1e-15);
    const std::complex<double> x(a - b, 0.0), ia(0.0, pi * eta);
    const std::complex<double> direct = std::sin(2.0 * pi * eta) / (std::sinh(x + ia) * std::sinh(x - ia));
    EXPECT_NEAR(xxz(a, b), direct.real(), 1e-12 * std::max(1.0, std::abs(direct)));
    EXPECT_NEAR(direct.imag(), 0.0, 1e-12 * std::max(1.0, std::abs(direct)));
  }
}

TEST(BareEnergy, Xxx) {
  EXPECT_EQ(bare_energy(xxx_model(0.0), 0.0), -8.0);
  EXPECT_NEAR(bare_energy(xxx_model(1.5), 1e8), 3.0, 1e-12);
}

TEST(BareEnergy, XxzMatchesComplexForm) {
  EXPECT_NEAR(bare_energy(make_model(Family::XXZ, 0.5, 0.3), 0.0), 0.6 - 4.0, 1e-14);
  for (double eta : {0.2, 0.5, 0.9})
    for (double l : {0.0, 0.4, 2.5}) {
      const std::complex<double> a(l, pi * eta / 2.0), b(l, -pi * eta / 2.0);
      const double s = std::sin(pi * eta);
      const double direct = 0.2 - (2.0 * s * s / (std::cosh(a) * std::cosh(b))).real();
      EXPECT_NEAR(bare_energy(make_model(Family::XXZ, eta, 0.1), l), direct, 1e-13);
    }
}

TEST(Nystrom, EmptyInterval) {
  const ChainModel m = xxx_model(1.0);
  const auto eps = solve_dressed_energy(m, 0.0, 50);
  EXPECT_EQ(eps(0.3), bare_energy(m, 0.3));
  EXPECT_EQ(fractional_charge(m, 0.0, 50), 1.0);
}

TEST(Nystrom, EvenSolution) {
  const auto eps = solve_dressed_energy(xxx_model(0.0), 3.0, 100);
  for (double l : {0.2, 1.0, 2.7}) EXPECT_NEAR(eps(l), eps(-l), 1e-12);
  for (double l : {0.2, 1.0, 2.7}) EXPECT_LT(eps(0.0), eps(l));
}

TEST(Nystrom, OffNodeResidual) {
  for (const ChainModel& m : {xxx_model(1.0), make_model(Family::XXZ, 0.7, 0.8)}) {
    for (int order : {100, 200}) {
      const auto z = solve_fractional_charge(m, 1.7, order);
      EXPECT_LE(z.nodal_residual(), 1e-10);
      for (double l : {-1.63, -0.5, 0.017, 0.9, 1.7}) EXPECT_LE(std::abs(z.residual(l, 3 * order / 2 + 1)), 1e-10) << order << " " << l;
    }
  }
}

TEST(Nystrom, RejectsLowOrder) {
  EXPECT_THROW(solve_dressed_energy(xxx_model(1.0), 1.0, 4), std::invalid_argument);
}

TEST(FermiBoundary, SaturatedAndInvalid) {
  EXPECT_EQ(find_fermi_boundary(xxx_model(4.0), 100), 0.0);
  EXPECT_EQ(find_fermi_boundary(make_model(Family::XXX, 1.0, 5.0, FieldRange::AllowSaturated), 100), 0.0);
  EXPECT_THROW(find_fermi_boundary(xxx_model(0.0), 100), std::invalid_argument);
}

TEST(FermiBoundary, EdgeEnergyVanishes) {
  const ChainModel m = xxx_model(2.0);
  const double lf = find_fermi_boundary(m, 200);
  EXPECT_LE(std::abs(solve_dressed_energy(m, lf, 200)(lf)), 1e-8);
}

TEST(FermiBoundary, XxxSmallField) {
  const double h = 1e-3;
  const double formula = std::log(std::pow(2.0 * pi, 3) / (std::exp(1.0) * h * h)) / (2.0 * pi);
  EXPECT_NEAR(find_fermi_boundary(xxx_model(h), 200) / formula, 1.0, 0.05);
}

// The kernel and bare energy above give sqrt(h_c - h)/4 near saturation.
TEST(FermiBoundary, XxxNearCritical) {
  const double d = 1e-3;
  EXPECT_NEAR(find_fermi_boundary(xxx_model(4.0 - d), 200) / (std::sqrt(d) / 4.0), 1.0, 0.05);
}

TEST(FermiBoundary, XxzNearCritical) {
  const double eta = 0.8, d = 1e-3;
  const double hc = saturation_field(Family::XXZ, eta);
  const double formula = std::sqrt(d) / (2.0 * std::tan(pi * eta / 2.0));
  EXPECT_NEAR(find_fermi_boundary(make_model(Family::XXZ, eta, hc - d), 200) / formula, 1.0, 0.05);
}

TEST(FermiBoundary, XxzSmallFieldAboveTwoThirds) {
  for (double eta : {0.7, 0.8, 0.9}) {
    const double h = 1e-3;
    const double formula = (1.0 - eta) * std::log(h0(eta) / h);
    EXPECT_NEAR(find_fermi_boundary(make_model(Family::XXZ, eta, h), 200) / formula, 1.0, 0.01) << eta;
  }
}

TEST(FractionalCharge, LargeBoundary) {
  const double lf = find_fermi_boundary(xxx_model(1e-4), 200);
  EXPECT_NEAR(fractional_charge(xxx_model(1e-4), lf, 200), 1.0 / std::sqrt(2.0), 0.02 / std::sqrt(2.0));
}

TEST(FractionalCharge, NodeDoubling) {
  const ChainModel m = xxx_model(2.0);
  const double lf = find_fermi_boundary(m, 200);
  EXPECT_LT(std::abs(fractional_charge(m, lf, 100) - fractional_charge(m, lf, 200)), 1e-8);
}

TEST(ThetaExact, XxxLimits) {
  const auto top = theta_exact(xxx_model(4.0));
  EXPECT_EQ(top.theta, 2.0);
  EXPECT_EQ(top.lambda_f, 0.0);
  const auto s = theta_exact(xxx_model(2.0));
  EXPECT_EQ(s.theta, 2.0 * s.z_edge * s.z_edge);
  EXPECT_EQ(s.grid_order, 200);
  EXPECT_LE(s.residual_eps_edge, 1e-8);
  EXPECT_LE(s.residual_ie, 1e-10);
  EXPECT_NEAR(theta_exact(xxx_model(3.999)).theta, theta_xxx_near_critical(3.999).theta, 1e-3);
}

// The near-critical formula drops an O(h_c - h) correction; the gap grows
// linearly away from saturation.
TEST(ThetaExact, XxxNearCriticalCorrectionIsLinear) {
  const double g1 = theta_exact(xxx_model(3.99)).theta - theta_xxx_near_critical(3.99).theta;
  const double g2 = theta_exact(xxx_model(3.9)).theta - theta_xxx_near_critical(3.9).theta;
  EXPECT_NEAR(g2 / g1, 10.0, 2.0);
  EXPECT_LT(std::abs(g2), 2e-2);
}

TEST(ThetaExact, XxzFreeFermionPoint) {
  EXPECT_NEAR(theta_exact(make_model(Family::XXZ, 0.5, 1e-3)).theta, 2.0, 1e-2);
}

// (theta eta - 1)/h^2 has the magnitude of alpha1 but the
// opposite sign.
TEST(ThetaExact, SmallFieldSlopeMagnitude) {
  for (double eta : {0.2, 0.3, 0.4}) {
    const double h = 0.02;
    const double slope = (theta_exact(make_model(Family::XXZ, eta, h)).theta * eta - 1.0) / (h * h);
    EXPECT_NEAR(slope / alpha1(eta), -1.0, 0.01) << eta;
  }
}

TEST(ThetaCurve, XxxMonotoneWithinWindow) {
  const std::vector<double> grid{0.01, 0.5, 1.0, 2.0, 3.0, 3.9, 3.99};
  const auto curve = theta_curve(Family::XXX, 1.0, grid);
  ASSERT_EQ(curve.size(), grid.size());
  for (std::size_t k = 0; k < curve.size(); ++k) {
    EXPECT_EQ(curve[k].model.h, grid[k]);
    EXPECT_GE(curve[k].theta, 1.0 - 1e-6);
    EXPECT_LE(curve[k].theta, 2.0 + 1e-6);
    EXPECT_LE(1.0 / curve[k].theta, 1.0 + 1e-6);
    EXPECT_GE(1.0 / curve[k].theta, 0.5 - 1e-6);
    if (k) {
      EXPECT_GT(curve[k].theta, curve[k - 1].theta);
    }
  }
  EXPECT_LT(curve.front().theta, 1.1);
  EXPECT_GT(curve.back().theta, 1.9);
}

TEST(ThetaCurve, XxzMovesTowardTwo) {
  for (double eta : {0.3, 0.8}) {
    const double hc = saturation_field(Family::XXZ, eta);
    std::vector<double> grid;
    for (int k = 1; k <= 8; ++k) grid.push_back(hc * k / 8.0);
    const auto curve = theta_curve(Family::XXZ, eta, grid);
    const double dir = eta > 0.5 ? 1.0 : -1.0;
    for (std::size_t k = 1; k < curve.size(); ++k) EXPECT_GE(dir * (curve[k].theta - curve[k - 1].theta), -1e-9) << eta;
    EXPECT_EQ(curve.back().theta, 2.0);
  }
  EXPECT_NEAR(theta_exact(make_model(Family::XXZ, 0.8, 1e-3)).theta, 1.25, 1e-3);
}

TEST(ThetaExact, OrderDoubling) {
  for (const ChainModel& m : {xxx_model(1.0), xxx_model(2.0), make_model(Family::XXZ, 0.8, 1.0)})
    EXPECT_LT(std::abs(theta_exact(m, 200).theta - theta_exact(m, 400).theta), 1e-6);
}
