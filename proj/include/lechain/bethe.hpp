#pragma once

#include <Eigen/Core>

#include <functional>
#include <span>
#include <vector>

#include "lechain/model.hpp"

namespace lechain {

/// Scattering kernel of the linear integral equations.
///
/// XXX: K(x) = -2 / (1 + x^2).
/// XXZ: K(x) = sin(2 pi eta) / (sinh(x + i pi eta) sinh(x - i pi eta))
///           = sin(2 pi eta) / (sinh^2 x + sin^2 pi eta),
/// using sinh(x + ia) sinh(x - ia) = sinh^2 x + sin^2 a.
struct KernelSpec {
  Family family;
  double eta;

  double operator()(double lambda, double mu) const;
};

KernelSpec kernel_spec(const ChainModel& model);

/// Bare magnon energy eps0(lambda).
///
/// XXX: 2h - 2 / (1/4 + lambda^2).
/// XXZ: 2h - 2 sin^2(pi eta) / (sinh^2 lambda + cos^2(pi eta / 2)), from
/// cosh(x + ia) cosh(x - ia) = sinh^2 x + cos^2 a.
double bare_energy(const ChainModel& model, double lambda);

/// Nystrom solution of u(l) - (1/2pi) int_{-L}^{L} K(l, m) u(m) dm = f(l).
class NystromSolution {
 public:
  NystromSolution(KernelSpec kernel, std::function<double(double)> rhs, double lambda_f, int order);

  /// Nystrom interpolant; exact at the nodes, spectrally accurate between them.
  double operator()(double lambda) const;

  const Eigen::VectorXd& nodes() const { return nodes_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  const Eigen::VectorXd& values() const { return values_; }
  double lambda_f() const { return lambda_f_; }
  int order() const { return order_; }
  /// max_k |(A u - f)_k| of the discrete system.
  double nodal_residual() const { return nodal_residual_; }

  /// Continuous residual at lambda, with the integral of the interpolant taken
  /// on an independent Gauss-Legendre rule of `reference_order` nodes.
  double residual(double lambda, int reference_order) const;

 private:
  KernelSpec kernel_;
  std::function<double(double)> rhs_;
  double lambda_f_;
  int order_;
  Eigen::VectorXd nodes_, weights_, values_;
  double nodal_residual_ = 0.0;
};

NystromSolution solve_dressed_energy(const ChainModel& model, double lambda_f, int order);
NystromSolution solve_fractional_charge(const ChainModel& model, double lambda_f, int order);

/// Z(Lambda) at the Fermi edge.
double fractional_charge(const ChainModel& model, double lambda_f, int order);

/// Fermi boundary Lambda(h) fixed by eps(Lambda) = 0; 0 at and above saturation.
double find_fermi_boundary(const ChainModel& model, int order);

struct BetheSolution {
  ChainModel model;
  double lambda_f = 0.0;
  double z_edge = 1.0;
  double theta = 2.0;
  int grid_order = 0;
  double residual_eps_edge = 0.0;
  double residual_ie = 0.0;
};

/// theta = 2 Z(Lambda)^2 for 0 < h <= h_c.
BetheSolution theta_exact(const ChainModel& model, int order = 200);

/// theta_exact at each field of `h_grid` (ascending order preserved).
std::vector<BetheSolution> theta_curve(Family family, double eta, std::span<const double> h_grid, int order = 200);

}  // namespace lechain
