#include "gltlab/trend.hpp"

namespace gltlab {

std::size_t top_half_start(std::size_t count) { return count / 2; }

bool non_increasing_counts(std::span<const Index> counts) {
    int inversions = 0;
    for (std::size_t i = 0; i + 1 < counts.size(); ++i) {
        if (counts[i + 1] > counts[i]) {
            if (counts[i + 1] - counts[i] > 1) return false;
            if (++inversions > 1) return false;
        }
    }
    return true;
}

bool non_increasing_fractions(std::span<const double> fractions, std::span<const Index> dims) {
    int inversions = 0;
    for (std::size_t i = 0; i + 1 < fractions.size(); ++i) {
        if (fractions[i + 1] > fractions[i]) {
            const double excess = fractions[i + 1] - fractions[i];
            if (excess > 1.0 / static_cast<double>(dims[i + 1])) return false;
            if (++inversions > 1) return false;
        }
    }
    return true;
}

double ls_slope(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    return denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
}

}  // namespace gltlab
