#include "lechain/ed.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>

#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lechain {

namespace {

using Bond = std::pair<int, int>;

std::vector<Bond> bonds(int n, Boundary boundary) {
  std::vector<Bond> out;
  for (int m = 0; m + 1 < n; ++m) out.emplace_back(m, m + 1);
  if (boundary == Boundary::Periodic && n > 2) out.emplace_back(n - 1, 0);
  return out;
}

inline int bit(unsigned b, int site) { return static_cast<int>((b >> site) & 1u); }
inline double spin(unsigned b, int site) { return 1.0 - 2.0 * bit(b, site); }

// Applies H to |b>; calls emit(target, amplitude) for each nonzero element.
template <typename Emit>
void apply(const Couplings& c, int n, const std::vector<Bond>& bl, unsigned b, Emit&& emit) {
  double diag = 0.0;
  for (auto [i, j] : bl) {
    diag += c.jz * spin(b, i) * spin(b, j) + c.shift;
    if (bit(b, i) != bit(b, j) && c.jxy != 0.0) emit(b ^ ((1u << i) | (1u << j)), 2.0 * c.jxy);
  }
  for (int m = 0; m < n; ++m) diag -= c.h * spin(b, m);
  emit(b, diag);
}

void check_sites(int n) {
  if (n < 2 || n > 14) throw std::invalid_argument("FiniteChain: n_sites must lie in 2..14");
}

void fix_phase(Eigen::VectorXcd& v) {
  Eigen::Index best = 0;
  double best_mag = -1.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double mag = std::abs(v[k]);
    if (mag > best_mag * (1.0 + 1e-12)) {
      best_mag = mag;
      best = k;
    }
  }
  v *= std::conj(v[best]) / std::abs(v[best]);
}

// sigma_y |0> = i|1>, sigma_y |1> = -i|0>
inline Complex y_phase(unsigned b, int site) { return bit(b, site) == 0 ? Complex(0, 1) : Complex(0, -1); }

void check_pair(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw std::out_of_range("site pair out of range");
}

}  // namespace

FiniteChain make_chain(const ChainModel& model, int n_sites, Boundary boundary) {
  check_sites(n_sites);
  return {model, n_sites, boundary};
}

Couplings couplings(const ChainModel& model) {
  if (model.family == Family::XXX) return {1.0, 1.0, 0.0, model.h};
  const double delta = model.delta();
  return {-1.0, -delta, delta, model.h};
}

Eigen::SparseMatrix<double> build_hamiltonian(const Couplings& c, int n, Boundary boundary) {
  check_sites(n);
  const unsigned dim = 1u << n;
  const auto bl = bonds(n, boundary);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(dim) * (bl.size() + 1));
  for (unsigned b = 0; b < dim; ++b)
    apply(c, n, bl, b, [&](unsigned target, double amp) { triplets.emplace_back(target, b, amp); });
  Eigen::SparseMatrix<double> h(dim, dim);
  h.setFromTriplets(triplets.begin(), triplets.end());
  return h;
}

Eigen::SparseMatrix<double> build_hamiltonian(const FiniteChain& chain) {
  return build_hamiltonian(couplings(chain.model), chain.n_sites, chain.boundary);
}

GroundState ground_state(const FiniteChain& chain) {
  const int n = chain.n_sites;
  check_sites(n);
  const Couplings c = couplings(chain.model);
  const auto bl = bonds(n, chain.boundary);
  const unsigned dim = 1u << n;

  GroundState best;
  best.n_sites = n;
  bool have = false;
  std::vector<int> index(dim, -1);
  // Sectors by number of down spins k; sigma^z = n - 2k >= 0 visited by increasing |sigma^z|.
  for (int k = n / 2; k >= 0; --k) {
    std::vector<unsigned> states;
    for (unsigned b = 0; b < dim; ++b)
      if (std::popcount(b) == k) {
        index[b] = static_cast<int>(states.size());
        states.push_back(b);
      }
    const auto m = static_cast<Eigen::Index>(states.size());
    Eigen::MatrixXd hs = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index col = 0; col < m; ++col)
      apply(c, n, bl, states[col], [&](unsigned target, double amp) { hs(index[target], col) += amp; });
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hs);
    const double e0 = es.eigenvalues()[0];
    if (!have || e0 < best.energy - 1e-10) {
      have = true;
      best.energy = e0;
      best.sz_sector = n - 2 * k;
      best.vector = Eigen::VectorXcd::Zero(dim);
      for (Eigen::Index r = 0; r < m; ++r) best.vector[states[r]] = es.eigenvectors()(r, 0);
    }
  }
  fix_phase(best.vector);
  return best;
}

GroundState ground_state_full(const FiniteChain& chain) {
  if (chain.n_sites > 12) throw std::invalid_argument("ground_state_full: n_sites must be <= 12");
  const Eigen::MatrixXd h = Eigen::MatrixXd(build_hamiltonian(chain));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  GroundState gs;
  gs.n_sites = chain.n_sites;
  gs.energy = es.eigenvalues()[0];
  gs.vector = es.eigenvectors().col(0).cast<Complex>();
  fix_phase(gs.vector);
  return gs;
}

Eigen::VectorXd full_spectrum(const FiniteChain& chain) {
  if (chain.n_sites > 12) throw std::invalid_argument("full_spectrum: n_sites must be <= 12");
  const Eigen::MatrixXd h = Eigen::MatrixXd(build_hamiltonian(chain));
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(h, Eigen::EigenvaluesOnly).eigenvalues();
}

double expectation(const Eigen::VectorXcd& psi, int n, PauliAxis axis, int site) {
  if (site < 0 || site >= n) throw std::out_of_range("site out of range");
  const unsigned mask = 1u << site;
  Complex sum = 0.0;
  for (unsigned b = 0; b < static_cast<unsigned>(psi.size()); ++b) {
    switch (axis) {
      case PauliAxis::Z: sum += std::norm(psi[b]) * spin(b, site); break;
      case PauliAxis::X: sum += std::conj(psi[b ^ mask]) * psi[b]; break;
      case PauliAxis::Y: sum += std::conj(psi[b ^ mask]) * y_phase(b, site) * psi[b]; break;
    }
  }
  return sum.real();
}

double expectation(const Eigen::VectorXcd& psi, int n, PauliAxis axis, int i, int j) {
  check_pair(n, i, j);
  const unsigned mask = (1u << i) | (1u << j);
  Complex sum = 0.0;
  for (unsigned b = 0; b < static_cast<unsigned>(psi.size()); ++b) {
    switch (axis) {
      case PauliAxis::Z: sum += std::norm(psi[b]) * spin(b, i) * spin(b, j); break;
      case PauliAxis::X: sum += std::conj(psi[b ^ mask]) * psi[b]; break;
      case PauliAxis::Y: sum += std::conj(psi[b ^ mask]) * y_phase(b, i) * y_phase(b, j) * psi[b]; break;
    }
  }
  return sum.real();
}

CorrelatorPair correlator(const GroundState& gs, PauliAxis axis, int i, int j) {
  if (!(i < j)) throw std::out_of_range("correlator: requires i < j");
  const double raw = expectation(gs.vector, gs.n_sites, axis, i, j);
  const double mi = expectation(gs.vector, gs.n_sites, axis, i);
  const double mj = expectation(gs.vector, gs.n_sites, axis, j);
  return {raw, raw - mi * mj};
}

TwoSpinDensity reduced_density(const Eigen::VectorXcd& psi, int n, int i, int j) {
  check_pair(n, i, j);
  if (psi.size() != (Eigen::Index{1} << n)) throw std::invalid_argument("reduced_density: dimension mismatch");
  Matrix4c rho = Matrix4c::Zero();
  const unsigned mask = (1u << i) | (1u << j);
  for (unsigned b = 0; b < static_cast<unsigned>(psi.size()); ++b) {
    if (b & mask) continue;
    // b enumerates the rest; fill the 4 pair configurations.
    std::array<Complex, 4> amp;
    for (int ab = 0; ab < 4; ++ab) {
      const unsigned full = b | ((ab >> 1) ? (1u << i) : 0u) | ((ab & 1) ? (1u << j) : 0u);
      amp[ab] = psi[full];
    }
    for (int r = 0; r < 4; ++r)
      for (int s = 0; s < 4; ++s) rho(r, s) += amp[r] * std::conj(amp[s]);
  }
  // Symmetrize rounding so the Hermiticity check is exact.
  return TwoSpinDensity(0.5 * (rho + rho.adjoint()));
}

TwoSpinDensity reduced_density(const GroundState& gs, int i, int j) { return reduced_density(gs.vector, gs.n_sites, i, j); }

Eigen::VectorXcd ghz_state(int n) {
  check_sites(n);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  v[0] = v[v.size() - 1] = 1.0 / std::sqrt(2.0);
  return v;
}

Eigen::VectorXcd basis_state(int n, unsigned index) {
  check_sites(n);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  if (index >= static_cast<unsigned>(v.size())) throw std::out_of_range("basis_state: index out of range");
  v[index] = 1.0;
  return v;
}

}  // namespace lechain
