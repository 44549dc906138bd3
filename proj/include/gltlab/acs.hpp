#pragma once
//
// Project     : gltlab
// Module      : acs
// Description : the single-matrix splitting functional and finite-n
//               estimators of the weak seminorms over dimension grids
//

#include "gltlab/sequences.hpp"
#include "gltlab/singular.hpp"
#include "gltlab/types.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gltlab {

// min over i = 1..n of (i/n + sigma_{i+1}), the optimal rank-fraction plus
// spectral-norm splitting of a single matrix. Always lies in [1/n, 1].
double p_of_matrix(const SingularProfile& prof);

// Finite-n estimate of an asymptotic seminorm on a dimension grid and a
// cutoff-fraction grid. Cells are absent when the cutoff index exceeds the
// dimension. The headline is the declared observable:
//   p_acs : max per-n value over the top half of dims (a limsup proxy)
//   qw    : value at the largest n and smallest delta
//   qwp   : value at the largest n and smallest delta
// trend holds the per-delta least-squares slope of value against n.
struct SeminormEstimate {
    std::string kind;  // "p_acs" | "qw" | "qwp"
    double      p = 0.0;  // Schatten exponent, qwp only
    std::vector<Index>  dims;
    std::vector<double> deltas;
    std::vector<std::vector<std::optional<double>>> table;  // [dim][delta]
    double              headline = 0.0;
    std::vector<double> trend;  // per delta

    const std::optional<double>& cell(std::size_t dim_idx, std::size_t delta_idx) const {
        return table[dim_idx][delta_idx];
    }
};

/// Per-n values P(X_n - Y_n); dims strictly increasing, at least 3 entries.
SeminormEstimate dacs_estimate(const MatrixSeq& x, const MatrixSeq& y, std::span<const Index> dims);

// q-hat(n, delta) = sigma_{floor(delta n) + 1}(X_n). Deltas lie in [0, 1/2];
// dims strictly increasing.
SeminormEstimate qw_estimate(const MatrixSeq& x, std::span<const Index> dims,
                             std::span<const double> deltas);

/// q-hat(n, delta) = (sum_{i > floor(delta n)} sigma_i^p)^{1/p} / n^{1/p}, finite p >= 1.
SeminormEstimate qwp_estimate(const MatrixSeq& x, std::span<const Index> dims,
                              std::span<const double> deltas, double p);

// shared grid validation (also used by the config validator)
void check_dims_increasing(std::span<const Index> dims, std::size_t min_count = 1);
void check_deltas(std::span<const double> deltas);

}  // namespace gltlab
