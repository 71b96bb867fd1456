#include "lechain/numerics.hpp"

#include <cmath>
#include <sstream>

namespace lechain {

double constant(Constant name) {
  switch (name) {
    case Constant::Ln2:
      return 0.693147180559945309417232121458;
    case Constant::EulerGamma:
      return 0.577215664901532860606512090082;
    case Constant::Zeta3:
      return 1.202056903159594285399738161511;
    case Constant::Zeta5:
      return 1.036927755143369926331365486457;
    case Constant::Zeta7:
      return 1.008349277381922826839797549849;
  }
  throw std::invalid_argument("unknown constant");
}

namespace {
void require_positive(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << who << ": argument must be positive and finite, got " << x;
    throw std::domain_error(msg.str());
  }
}
}  // namespace

double gamma_fn(double x) {
  require_positive(x, "gamma_fn");
  return std::tgamma(x);
}

double log_gamma_fn(double x) {
  require_positive(x, "log_gamma_fn");
  return std::lgamma(x);
}

}  // namespace lechain
