#pragma once

namespace arena {

/// Per-scenario min-max normalization. Clamps raw into [theo_min, theo_max]
/// and rescales to [0, 1]. Negative infinity is treated as theo_min; NaN is
/// rejected. Throws std::invalid_argument("invalid-bounds") when
/// theo_min >= theo_max and ("nan-score") on NaN input.
double normalize_score(double raw, double theo_min, double theo_max);

}  // namespace arena
