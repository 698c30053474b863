#pragma once

#include <algorithm>
#include <cmath>

namespace crowdtraits::detail {

/// A min-max range below this is numerical noise, not signal; such series are
/// treated as constant and mapped to the scale midpoint. Without the guard,
/// last-ulp differences (e.g. speeds recovered from position differences)
/// would be stretched to full scale.
inline bool effectively_constant(double lo, double hi) {
    const double range = hi - lo;
    return range <= 1e-9 * std::max({1.0, std::abs(lo), std::abs(hi)});
}

/// Rescales value from [lo, hi] to [0, scale]; midpoint when the range is
/// noise-level.
inline double minmax_scale(double value, double lo, double hi, double scale) {
    if (effectively_constant(lo, hi)) return scale / 2.0;
    return (value - lo) / (hi - lo) * scale;
}

}  // namespace crowdtraits::detail
