#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <optional>

#include "lechain/model.hpp"
#include "lechain/quantum.hpp"

namespace lechain {

enum class Boundary { Open, Periodic };

/// Finite chain of 2..14 sites. Site k is bit k of the basis index; bit 0
/// is spin up (sigma^z = +1). Periodic chains of two sites have one bond.
struct FiniteChain {
  ChainModel model;
  int n_sites;
  Boundary boundary;
};

FiniteChain make_chain(const ChainModel& model, int n_sites, Boundary boundary);

/// H = sum_bonds [jxy (xx + yy) + jz zz + shift] - h sum_m z.
struct Couplings {
  double jxy;
  double jz;
  double shift;
  double h;
};

/// XXX: (1, 1, 0, h). XXZ: (-1, -Delta, +Delta, h), the latter being
/// -[xx + yy + Delta (zz - 1)].
Couplings couplings(const ChainModel& model);

Eigen::SparseMatrix<double> build_hamiltonian(const FiniteChain& chain);
Eigen::SparseMatrix<double> build_hamiltonian(const Couplings& c, int n_sites, Boundary boundary);

struct GroundState {
  double energy = 0.0;
  Eigen::VectorXcd vector;
  /// Total sigma^z of the sector the state was taken from.
  std::optional<int> sz_sector;
  int n_sites = 0;
};

/// Lowest state by dense diagonalization of each conserved total-sigma^z
/// sector with sigma^z >= 0; on ties the smallest |sigma^z| wins. The
/// largest-magnitude amplitude is made real and positive.
GroundState ground_state(const FiniteChain& chain);

/// Same by dense diagonalization of the full 2^N space (N <= 12).
GroundState ground_state_full(const FiniteChain& chain);

/// All 2^N eigenvalues, ascending (N <= 12).
Eigen::VectorXd full_spectrum(const FiniteChain& chain);

enum class PauliAxis { X = 1, Y = 2, Z = 3 };

struct CorrelatorPair {
  double raw;        ///< <sigma_a^i sigma_a^j>
  double connected;  ///< raw - <sigma_a^i><sigma_a^j>
};

double expectation(const Eigen::VectorXcd& state, int n_sites, PauliAxis axis, int site);
double expectation(const Eigen::VectorXcd& state, int n_sites, PauliAxis axis, int i, int j);

CorrelatorPair correlator(const GroundState& gs, PauliAxis axis, int i, int j);

/// Reduced state of sites (i, j), i first: basis |ab> -> index 2a + b.
TwoSpinDensity reduced_density(const Eigen::VectorXcd& state, int n_sites, int i, int j);
TwoSpinDensity reduced_density(const GroundState& gs, int i, int j);

/// (|0...0> + |1...1>)/sqrt(2)
Eigen::VectorXcd ghz_state(int n_sites);
/// Computational basis state with the given index.
Eigen::VectorXcd basis_state(int n_sites, unsigned index);

}  // namespace lechain
