#pragma once
//
// Project     : gltlab
// Module      : singular
// Description : singular value profiles of dense complex matrices
//

#include "gltlab/types.hpp"

#include <span>
#include <utility>
#include <vector>

namespace gltlab {

// Non-increasing singular values of one n x n matrix, with the convention
// sigma_{n+1} = 0. Values below 1e-12 * sigma_1 are clamped to zero so that
// numerical dust does not inflate counts near alpha = 0.
struct SingularProfile {
    Index   n = 0;
    RVector sigma;

    /// sigma_i for 1 <= i <= n+1 (1-based, sigma_{n+1} = 0).
    double value(Index i) const;
};

SingularProfile svd_profile(const CMatrix& a);

struct SvdFactors {
    CMatrix u;
    RVector sigma;
    CMatrix v;  // a = u * sigma.asDiagonal() * v.adjoint()
};

/// Full decomposition; the reconstruction residual is checked against
/// 1e-10 * |a|_F.
SvdFactors svd_factors(const CMatrix& a);

/// sigma_1.
double spectral_norm(const CMatrix& a);

/// (sum_i sigma_i^p)^{1/p}; requires finite p >= 1.
double schatten(const SingularProfile& prof, double p);

/// Exact fractions #(sigma >= alpha)/n for each alpha (alphas sorted
/// increasing), by binary search on the sorted profile.
std::vector<std::pair<double, double>> alpha_profile(const SingularProfile& prof,
                                                     std::span<const double> alphas);

/// #(sigma >= alpha) for a single cutoff.
Index count_at_least(const SingularProfile& prof, double alpha);

}  // namespace gltlab
