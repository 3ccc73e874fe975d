#include "lagr/config.hpp"

namespace lagr {

const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace lagr
