#pragma once
//
// Project     : gltlab
// Module      : clustering
// Description : singular-value outlier counts of a difference sequence and
//               finite-sample cluster labels
//

#include "gltlab/sequences.hpp"
#include "gltlab/types.hpp"

#include <span>
#include <string>
#include <vector>

namespace gltlab {

enum class ClusterLabel { none, weak, strong, inconclusive };
const char* to_string(ClusterLabel label);

enum class FrobeniusEvidence { none, weak_evidence, strong_evidence };
const char* to_string(FrobeniusEvidence evidence);

// Outlier counts c(n, eps) = #{sigma_i(D_n) >= eps} plus Frobenius trends of
// a difference sequence. The finite-sample thresholds are conventions and are
// carried in every report: weak_tol bounds the outlier fraction at the
// largest dimension, strong_cap bounds absolute counts.
struct ClusterReport {
    std::vector<Index>  dims;
    std::vector<double> eps_grid;
    std::vector<std::vector<Index>> counts;  // [dim][eps]
    std::vector<double> frob2;               // |D_n|_F^2 per dim
    std::vector<double> frob2_over_n;
    std::vector<ClusterLabel> classification;  // per eps, filled by classify()
    std::vector<double>       fit_slope;       // per eps, LS slope of log c vs log n

    double weak_tol   = 0.02;
    Index  strong_cap = 8;
};

/// Exact counts from SVD profiles; Frobenius norms directly from entries.
/// Requires at least 4 dims for a classifiable report.
ClusterReport outlier_counts(const MatrixSeq& delta, std::span<const Index> dims,
                             std::span<const double> eps_grid);

// Per-eps labels over the top half of the dimension grid:
//   weak   : c/n non-increasing and final fraction <= weak_tol
//   strong : weak, and c non-increasing with max count <= strong_cap
// Labels nest (strong implies the weak conditions). Fewer than 4 dims yields
// "inconclusive". Fills report.classification and report.fit_slope.
std::vector<ClusterLabel> classify(ClusterReport& report);

// One-way Frobenius evidence:
//   weak evidence   : |D|_F^2 / n non-increasing over the top half and final
//                     value <= weak_tol
//   strong evidence : additionally |D|_F^2 stays bounded, read as
//                     max over the top half <= 2 * min over all dims + strong_cap
FrobeniusEvidence frobenius_criterion(const ClusterReport& report);

/// Lattice aggregate over the eps grid: the weakest per-eps label.
ClusterLabel aggregate_label(std::span<const ClusterLabel> labels);

}  // namespace gltlab
