#pragma once

#include <stdexcept>
#include <string>

namespace lechain {

enum class Family { XXX, XXZ };

/// Whether a model may sit above the saturation field (fully polarized, Lambda = 0).
enum class FieldRange { Critical, AllowSaturated };

/// Spin-1/2 chain parameters. XXX is the eta = 1 endpoint of the XXZ family.
struct ChainModel {
  Family family = Family::XXX;
  double eta = 1.0;
  double h = 0.0;

  /// Anisotropy Delta = cos(pi eta); 1 for XXX by convention.
  double delta() const;
};

ChainModel make_model(Family family, double eta, double h,
                      FieldRange range = FieldRange::Critical);

inline ChainModel xxx_model(double h = 0.0) { return make_model(Family::XXX, 1.0, h); }
inline ChainModel xxz_model(double eta, double h = 0.0) { return make_model(Family::XXZ, eta, h); }

/// Saturation field: 4 for XXX, 2(1 - cos pi eta) for XXZ.
double saturation_field(Family family, double eta);

/// Lattice distance |i - j| >= 1.
class Separation {
 public:
  explicit Separation(long n) : n_(n) {
    if (n < 1) throw std::invalid_argument("separation must be >= 1, got " + std::to_string(n));
  }
  long value() const { return n_; }
  bool odd() const { return (n_ & 1) != 0; }
  /// (-1)^n
  double parity() const { return odd() ? -1.0 : 1.0; }

  friend bool operator==(const Separation&, const Separation&) = default;

 private:
  long n_;
};

/// Thrown when an iterative numerical method fails to reach its tolerance.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* to_string(Family family);

}  // namespace lechain
