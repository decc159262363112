#pragma once

#include <cmath>

namespace sens {

// Round half away from zero at the given number of decimals, the way
// published tables are rounded.
inline double round_to(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

}  // namespace sens
