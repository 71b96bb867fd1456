#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <vector>

#include "lechain/quantum.hpp"

namespace lechain {

/// Product projective measurement on the assisting spins (all sites except
/// the marked pair, ascending). Site k is measured in the basis
///   |u>  = cos(t/2)|0> + e^{i p} sin(t/2)|1>,
///   |u'> = -e^{-i p} sin(t/2)|0> + cos(t/2)|1>,
/// outcome 0 selecting |u>.
struct MeasurementPlan {
  std::vector<double> polar;    ///< t_k in [0, pi]
  std::vector<double> azimuth;  ///< p_k in [0, 2 pi)

  std::size_t size() const { return polar.size(); }
  static MeasurementPlan uniform(std::size_t sites, double polar, double azimuth);
};

struct Outcome {
  /// Bit k is the result on the k-th assisting site.
  unsigned bits = 0;
  double probability = 0.0;
  /// Empty for outcomes with probability below 1e-14.
  std::optional<TwoSpinState> state;
};

struct OutcomeEnsemble {
  std::vector<Outcome> outcomes;

  double total_probability() const;
  /// sum_s p_s |psi_s><psi_s|
  Matrix4c mixture() const;
};

/// Assisting sites for a marked pair, ascending.
std::vector<int> assisting_sites(int n_sites, int i, int j);

/// Projects the assisting spins of `state` onto every outcome string of `plan`.
OutcomeEnsemble enumerate_outcomes(const Eigen::VectorXcd& state, int n_sites, const MeasurementPlan& plan, int i,
                                   int j);

/// sum_s p_s C(psi_s)
double average_concurrence(const OutcomeEnsemble& ensemble);

struct LESearchOptions {
  int restarts = 32;
  double tol = 1e-6;
  std::uint64_t seed = 0;
};

struct LEResult {
  double value = 0.0;
  MeasurementPlan plan;
  int restarts_used = 0;
  /// The two best restarts agree within tol.
  bool converged = false;
  /// Best value after each restart.
  std::vector<double> best_history;
};

/// Localizable entanglement of pair (i, j) over fixed product projective
/// measurements, by seeded multi-start coordinate ascent.
LEResult optimize_le(const Eigen::VectorXcd& state, int n_sites, int i, int j, const LESearchOptions& options = {});

}  // namespace lechain
