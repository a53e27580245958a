#include "arena/core/scoring.hpp"

#include <cmath>
#include <stdexcept>

namespace arena {

double normalize_score(double raw, double theo_min, double theo_max) {
  if (!(theo_min < theo_max)) {
    throw std::invalid_argument("invalid-bounds");
  }
  if (std::isnan(raw)) {
    throw std::invalid_argument("nan-score");
  }
  if (std::isinf(raw) && raw < 0.0) raw = theo_min;
  const double clamped = std::max(theo_min, std::min(theo_max, raw));
  return (clamped - theo_min) / (theo_max - theo_min);
}

}  // namespace arena
