#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

// All internal computation uses bytes, FIL and integer day indices.
// Unit conversions happen only at the ingestion/emission boundary.

namespace filabm {

using Day = std::int64_t;

inline constexpr double kGiB = 1073741824.0;          // 2^30
inline constexpr double kPiB = kGiB * 1048576.0;      // 2^50
inline constexpr double kEiB = kPiB * 1024.0;         // 2^60

inline constexpr double kDaysPerYear = 365.0;

/// Default sector size used as the unit for rewards/sector metrics.
inline constexpr double kSectorBytes = 32.0 * kGiB;

/// Quality multiplier for verified-deal (FIL+) power.
inline constexpr double kFilPlusMultiplier = 10.0;

/// Relative difference against max(1, |a|, |b|); used for tolerance checks.
inline double rel_diff(double a, double b) {
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) / scale;
}

/// Quality factor of a raw-byte blend with the given FIL+ fraction.
inline double quality_factor(double fil_plus_fraction) {
    return (1.0 - fil_plus_fraction) + kFilPlusMultiplier * fil_plus_fraction;
}

} // namespace filabm
