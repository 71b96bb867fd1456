#include "lechain/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace lechain {

double ChainModel::delta() const {
  if (family == Family::XXX) return 1.0;
  return std::cos(std::numbers::pi * eta);
}

double saturation_field(Family family, double eta) {
  if (family == Family::XXX) return 4.0;
  return 2.0 * (1.0 - std::cos(std::numbers::pi * eta));
}

ChainModel make_model(Family family, double eta, double h, FieldRange range) {
  if (!std::isfinite(eta) || !std::isfinite(h)) throw std::invalid_argument("non-finite model parameter");
  if (family == Family::XXX) {
    if (eta != 1.0) throw std::invalid_argument("XXX requires eta = 1");
  } else if (!(eta > 0.0 && eta < 1.0)) {
    std::ostringstream msg;
    msg << "XXZ requires 0 < eta < 1, got " << eta;
    throw std::invalid_argument(msg.str());
  }
  if (h < 0.0) throw std::invalid_argument("magnetic field must be >= 0");
  if (range == FieldRange::Critical && h > saturation_field(family, eta)) {
    std::ostringstream msg;
    msg << "field " << h << " exceeds saturation field " << saturation_field(family, eta);
    throw std::invalid_argument(msg.str());
  }
  return ChainModel{family, eta, h};
}

const char* to_string(Family family) { return family == Family::XXX ? "XXX" : "XXZ"; }

}  // namespace lechain
