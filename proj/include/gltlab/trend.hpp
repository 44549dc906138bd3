#pragma once
//
// Project     : gltlab
// Module      : trend
// Description : shared finite-sample trend conventions (top-half windows,
//               tolerant monotonicity, least-squares slopes)
//

#include "gltlab/types.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace gltlab {

/// First index of the upper half of a length-`count` grid: the window
/// [top_half_start(count), count) holds the last ceil(count/2) entries.
std::size_t top_half_start(std::size_t count);

// Non-increasing check for integer counts, tolerating one inversion of
// magnitude <= 1 count (SVD jitter near a cutoff).
bool non_increasing_counts(std::span<const Index> counts);

// Non-increasing check for per-n fractions; an inversion is tolerated once
// when it is worth at most one count at the later dimension, i.e. the excess
// is <= 1/n.
bool non_increasing_fractions(std::span<const double> fractions, std::span<const Index> dims);

/// Least-squares slope of y against x; 0 when fewer than two points.
double ls_slope(std::span<const double> x, std::span<const double> y);

}  // namespace gltlab
