#include "lechain/bethe.hpp"

#include <Eigen/LU>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lechain/field_theory.hpp"
#include "lechain/numerics.hpp"

namespace lechain {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
}  // namespace

double KernelSpec::operator()(double lambda, double mu) const {
  const double x = lambda - mu;
  if (family == Family::XXX) return -2.0 / (1.0 + x * x);
  const double sh = std::sinh(x);
  const double s = std::sin(pi * eta);
  return std::sin(2.0 * pi * eta) / (sh * sh + s * s);
}

KernelSpec kernel_spec(const ChainModel& model) { return {model.family, model.eta}; }

double bare_energy(const ChainModel& model, double lambda) {
  if (model.family == Family::XXX) return 2.0 * model.h - 2.0 / (0.25 + lambda * lambda);
  const double s = std::sin(pi * model.eta);
  const double c = std::cos(pi * model.eta / 2.0);
  const double sh = std::sinh(lambda);
  return 2.0 * model.h - 2.0 * s * s / (sh * sh + c * c);
}

NystromSolution::NystromSolution(KernelSpec kernel, std::function<double(double)> rhs, double lambda_f, int order)
    : kernel_(kernel), rhs_(std::move(rhs)), lambda_f_(lambda_f), order_(order) {
  if (lambda_f < 0.0) throw std::invalid_argument("NystromSolution: Fermi boundary must be >= 0");
  if (order < 8) throw std::invalid_argument("NystromSolution: order must be >= 8");
  if (lambda_f == 0.0) {
    order_ = 0;
    return;
  }
  const auto rule = gauss_legendre<double>(order, -lambda_f, lambda_f);
  nodes_ = rule.nodes;
  weights_ = rule.weights;

  Eigen::MatrixXd a(order, order);
  Eigen::VectorXd f(order);
  for (int i = 0; i < order; ++i) {
    f[i] = rhs_(nodes_[i]);
    for (int j = 0; j < order; ++j) a(i, j) = -kernel_(nodes_[i], nodes_[j]) * weights_[j] / two_pi;
    a(i, i) += 1.0;
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  values_ = lu.solve(f);
  if (!values_.allFinite()) throw NonConvergence("NystromSolution: singular linear system");
  nodal_residual_ = (a * values_ - f).cwiseAbs().maxCoeff();
}

double NystromSolution::operator()(double lambda) const {
  double sum = 0.0;
  for (int j = 0; j < order_; ++j) sum += weights_[j] * kernel_(lambda, nodes_[j]) * values_[j];
  return rhs_(lambda) + sum / two_pi;
}

double NystromSolution::residual(double lambda, int reference_order) const {
  if (order_ == 0) return 0.0;
  const auto ref = gauss_legendre<double>(reference_order, -lambda_f_, lambda_f_);
  double integral = 0.0;
  for (int k = 0; k < ref.order; ++k) integral += ref.weights[k] * kernel_(lambda, ref.nodes[k]) * (*this)(ref.nodes[k]);
  return (*this)(lambda) - integral / two_pi - rhs_(lambda);
}

NystromSolution solve_dressed_energy(const ChainModel& model, double lambda_f, int order) {
  return NystromSolution(kernel_spec(model), [model](double l) { return bare_energy(model, l); }, lambda_f, order);
}

NystromSolution solve_fractional_charge(const ChainModel& model, double lambda_f, int order) {
  return NystromSolution(kernel_spec(model), [](double) { return 1.0; }, lambda_f, order);
}

double fractional_charge(const ChainModel& model, double lambda_f, int order) {
  return solve_fractional_charge(model, lambda_f, order)(lambda_f);
}

namespace {

double initial_upper_boundary(const ChainModel& model) {
  double guess = 1.0;
  if (model.family == Family::XXX) {
    guess = std::log(two_pi * two_pi * two_pi / (std::numbers::e * model.h * model.h)) / two_pi;
  } else {
    guess = (1.0 - model.eta) * std::log(h0(model.eta) / model.h);
  }
  return std::max(1.0, 3.0 * guess);
}

}  // namespace

double find_fermi_boundary(const ChainModel& model, int order) {
  if (!(model.h > 0.0)) throw std::invalid_argument("find_fermi_boundary: field must be positive");
  if (model.h >= critical_field(model)) return 0.0;
  auto edge_energy = [&](double lambda_f) {
    if (lambda_f == 0.0) return bare_energy(model, 0.0);
    return solve_dressed_energy(model, lambda_f, order)(lambda_f);
  };
  double hi = initial_upper_boundary(model);
  int expansions = 0;
  while (edge_energy(hi) <= 0.0) {
    hi *= 2.0;
    if (++expansions > 12) throw NonConvergence("find_fermi_boundary: edge energy never turns positive");
  }
  return find_root(edge_energy, 0.0, hi, 1e-14);
}

BetheSolution theta_exact(const ChainModel& model, int order) {
  if (!(model.h > 0.0) || model.h > critical_field(model))
    throw std::invalid_argument("theta_exact: requires 0 < h <= h_c");
  BetheSolution out;
  out.model = model;
  out.grid_order = order;
  out.lambda_f = find_fermi_boundary(model, order);
  if (out.lambda_f == 0.0) {
    out.residual_eps_edge = std::abs(bare_energy(model, 0.0));
    return out;
  }
  const auto eps = solve_dressed_energy(model, out.lambda_f, order);
  const auto z = solve_fractional_charge(model, out.lambda_f, order);
  out.z_edge = z(out.lambda_f);
  out.theta = 2.0 * out.z_edge * out.z_edge;
  out.residual_eps_edge = std::abs(eps(out.lambda_f));
  out.residual_ie = std::max(eps.nodal_residual(), z.nodal_residual());
  if (out.residual_eps_edge > 1e-8) throw NonConvergence("theta_exact: Fermi-edge energy not resolved");
  return out;
}

std::vector<BetheSolution> theta_curve(Family family, double eta, std::span<const double> h_grid, int order) {
  std::vector<BetheSolution> out;
  out.reserve(h_grid.size());
  for (double h : h_grid) out.push_back(theta_exact(make_model(family, eta, h), order));
  return out;
}

}  // namespace lechain
