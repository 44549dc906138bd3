#include "gltlab/clustering.hpp"

#include "gltlab/parallel.hpp"
#include "gltlab/singular.hpp"
#include "gltlab/trend.hpp"

#include <algorithm>
#include <cmath>

namespace gltlab {

const char* to_string(ClusterLabel label) {
    switch (label) {
        case ClusterLabel::none: return "none";
        case ClusterLabel::weak: return "weak";
        case ClusterLabel::strong: return "strong";
        case ClusterLabel::inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(FrobeniusEvidence evidence) {
    switch (evidence) {
        case FrobeniusEvidence::none: return "none";
        case FrobeniusEvidence::weak_evidence: return "weak-evidence";
        case FrobeniusEvidence::strong_evidence: return "strong-evidence";
    }
    return "?";
}

ClusterReport outlier_counts(const MatrixSeq& delta, std::span<const Index> dims,
                             std::span<const double> eps_grid) {
    if (dims.empty()) throw Error("outlier_counts: dimension grid must be nonempty");
    for (std::size_t i = 1; i < dims.size(); ++i)
        if (dims[i] <= dims[i - 1]) throw Error("outlier_counts: dims must be strictly increasing");
    if (eps_grid.empty()) throw Error("outlier_counts: eps grid must be nonempty");
    for (double eps : eps_grid)
        if (!(eps > 0.0)) throw Error("outlier_counts: eps values must be positive");

    ClusterReport r;
    r.dims.assign(dims.begin(), dims.end());
    r.eps_grid.assign(eps_grid.begin(), eps_grid.end());
    r.counts.assign(dims.size(), std::vector<Index>(eps_grid.size(), 0));
    r.frob2.assign(dims.size(), 0.0);
    r.frob2_over_n.assign(dims.size(), 0.0);

    parallel_for(dims.size(), [&](std::size_t i) {
        const CMatrix d = delta.at(dims[i]);
        r.frob2[i]        = d.squaredNorm();
        r.frob2_over_n[i] = r.frob2[i] / static_cast<double>(dims[i]);
        const SingularProfile prof = svd_profile(d);
        for (std::size_t j = 0; j < eps_grid.size(); ++j)
            r.counts[i][j] = count_at_least(prof, eps_grid[j]);
    });
    return r;
}

namespace {

std::vector<double> fractions_for_eps(const ClusterReport& r, std::size_t j) {
    std::vector<double> fr(r.dims.size());
    for (std::size_t i = 0; i < r.dims.size(); ++i)
        fr[i] = static_cast<double>(r.counts[i][j]) / static_cast<double>(r.dims[i]);
    return fr;
}

}  // namespace

std::vector<ClusterLabel> classify(ClusterReport& report) {
    const std::size_t k = report.dims.size();
    report.classification.assign(report.eps_grid.size(), ClusterLabel::inconclusive);
    report.fit_slope.assign(report.eps_grid.size(), 0.0);

    for (std::size_t j = 0; j < report.eps_grid.size(); ++j) {
        std::vector<double> log_n, log_c;
        for (std::size_t i = 0; i < k; ++i) {
            if (report.counts[i][j] > 0) {
                log_n.push_back(std::log(static_cast<double>(report.dims[i])));
                log_c.push_back(std::log(static_cast<double>(report.counts[i][j])));
            }
        }
        report.fit_slope[j] = ls_slope(log_n, log_c);

        if (k < 4) continue;  // stays inconclusive

        const std::size_t start = top_half_start(k);
        const auto        fr    = fractions_for_eps(report, j);
        std::vector<Index> top_counts(report.counts.size() - start);
        std::vector<double> top_fr(fr.begin() + static_cast<std::ptrdiff_t>(start), fr.end());
        std::vector<Index>  top_dims(report.dims.begin() + static_cast<std::ptrdiff_t>(start),
                                     report.dims.end());
        for (std::size_t i = start; i < k; ++i) top_counts[i - start] = report.counts[i][j];

        const bool weak_ok =
            non_increasing_fractions(top_fr, top_dims) && fr.back() <= report.weak_tol;
        const bool strong_ok =
            weak_ok && non_increasing_counts(top_counts) &&
            *std::max_element(top_counts.begin(), top_counts.end()) <= report.strong_cap;

        report.classification[j] =
            strong_ok ? ClusterLabel::strong : (weak_ok ? ClusterLabel::weak : ClusterLabel::none);
    }
    return report.classification;
}

FrobeniusEvidence frobenius_criterion(const ClusterReport& report) {
    const std::size_t k = report.frob2.size();
    if (k == 0) throw Error("frobenius_criterion: frob fields are not populated");

    const std::size_t start = top_half_start(k);
    bool non_increasing     = true;
    int  inversions         = 0;
    for (std::size_t i = start; i + 1 < k; ++i) {
        if (report.frob2_over_n[i + 1] > report.frob2_over_n[i] * (1.0 + 1e-9) + 1e-12) {
            if (++inversions > 1) {
                non_increasing = false;
                break;
            }
        }
    }
    const bool weak_ok = non_increasing && report.frob2_over_n.back() <= report.weak_tol;

    const double min_all = *std::min_element(report.frob2.begin(), report.frob2.end());
    double       max_top = 0.0;
    for (std::size_t i = start; i < k; ++i) max_top = std::max(max_top, report.frob2[i]);
    const bool bounded = max_top <= 2.0 * min_all + static_cast<double>(report.strong_cap);

    if (weak_ok && bounded) return FrobeniusEvidence::strong_evidence;
    if (weak_ok) return FrobeniusEvidence::weak_evidence;
    return FrobeniusEvidence::none;
}

ClusterLabel aggregate_label(std::span<const ClusterLabel> labels) {
    if (labels.empty()) return ClusterLabel::inconclusive;
    ClusterLabel worst = ClusterLabel::strong;
    for (ClusterLabel l : labels) {
        if (l == ClusterLabel::inconclusive) return ClusterLabel::inconclusive;
        if (static_cast<int>(l) < static_cast<int>(worst)) worst = l;
    }
    return worst;
}

}  // namespace gltlab
