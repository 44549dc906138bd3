#include "gltlab/acs.hpp"

#include "gltlab/parallel.hpp"
#include "gltlab/trend.hpp"

#include <algorithm>
#include <cmath>

namespace gltlab {

double p_of_matrix(const SingularProfile& prof) {
    const Index n = prof.n;
    if (n < 1) throw Error("p_of_matrix: empty profile");
    const double nd   = static_cast<double>(n);
    double       best = kInf;
    for (Index i = 1; i <= n; ++i)
        best = std::min(best, static_cast<double>(i) / nd + prof.value(i + 1));
    return best;
}

void check_dims_increasing(std::span<const Index> dims, std::size_t min_count) {
    if (dims.size() < min_count)
        throw Error("dimension grid needs at least " + std::to_string(min_count) + " entries");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 1) throw Error("dimension grid entries must be >= 1");
        if (i > 0 && dims[i] <= dims[i - 1]) throw Error("dimension grid must be strictly increasing");
    }
}

void check_deltas(std::span<const double> deltas) {
    if (deltas.empty()) throw Error("cutoff grid must be nonempty");
    for (double d : deltas)
        if (!(d >= 0.0) || d > 0.5) throw Error("cutoff fractions must lie in [0, 1/2]");
}

namespace {

std::vector<SingularProfile> profiles_of(const MatrixSeq& x, std::span<const Index> dims) {
    std::vector<SingularProfile> profs(dims.size());
    parallel_for(dims.size(), [&](std::size_t i) { profs[i] = svd_profile(x.at(dims[i])); });
    return profs;
}

std::vector<double> per_delta_trend(const SeminormEstimate& e) {
    std::vector<double> trend(e.deltas.size(), 0.0);
    for (std::size_t j = 0; j < e.deltas.size(); ++j) {
        std::vector<double> xs, ys;
        for (std::size_t i = 0; i < e.dims.size(); ++i) {
            if (e.table[i][j]) {
                xs.push_back(static_cast<double>(e.dims[i]));
                ys.push_back(*e.table[i][j]);
            }
        }
        trend[j] = ls_slope(xs, ys);
    }
    return trend;
}

// headline = cell at the largest dimension and smallest delta
double corner_headline(const SeminormEstimate& e) {
    const std::size_t j =
        static_cast<std::size_t>(std::min_element(e.deltas.begin(), e.deltas.end()) - e.deltas.begin());
    const auto& cell = e.table.back()[j];
    if (!cell) throw Error("estimate headline cell is absent");
    return *cell;
}

}  // namespace

SeminormEstimate dacs_estimate(const MatrixSeq& x, const MatrixSeq& y, std::span<const Index> dims) {
    check_dims_increasing(dims, 3);

    SeminormEstimate e;
    e.kind   = "p_acs";
    e.dims.assign(dims.begin(), dims.end());
    e.deltas = {0.0};
    e.table.assign(dims.size(), std::vector<std::optional<double>>(1));

    parallel_for(dims.size(), [&](std::size_t i) {
        const CMatrix diff = x.at(dims[i]) - y.at(dims[i]);
        e.table[i][0]      = p_of_matrix(svd_profile(diff));
    });

    double headline = 0.0;
    for (std::size_t i = top_half_start(dims.size()); i < dims.size(); ++i)
        headline = std::max(headline, *e.table[i][0]);
    e.headline = headline;
    e.trend    = per_delta_trend(e);
    return e;
}

SeminormEstimate qw_estimate(const MatrixSeq& x, std::span<const Index> dims,
                             std::span<const double> deltas) {
    check_dims_increasing(dims);
    check_deltas(deltas);

    SeminormEstimate e;
    e.kind = "qw";
    e.dims.assign(dims.begin(), dims.end());
    e.deltas.assign(deltas.begin(), deltas.end());
    e.table.assign(dims.size(), std::vector<std::optional<double>>(deltas.size()));

    const auto profs = profiles_of(x, dims);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        for (std::size_t j = 0; j < deltas.size(); ++j) {
            const Index cut = static_cast<Index>(std::floor(deltas[j] * static_cast<double>(dims[i])));
            if (cut + 1 > dims[i]) continue;  // cell absent
            e.table[i][j] = profs[i].value(cut + 1);
        }
    }
    e.headline = corner_headline(e);
    e.trend    = per_delta_trend(e);
    return e;
}

SeminormEstimate qwp_estimate(const MatrixSeq& x, std::span<const Index> dims,
                              std::span<const double> deltas, double p) {
    check_dims_increasing(dims);
    check_deltas(deltas);
    if (!(p >= 1.0) || p == kInf) throw Error("qwp_estimate: p must be finite and >= 1");

    SeminormEstimate e;
    e.kind = "qwp";
    e.p    = p;
    e.dims.assign(dims.begin(), dims.end());
    e.deltas.assign(deltas.begin(), deltas.end());
    e.table.assign(dims.size(), std::vector<std::optional<double>>(deltas.size()));

    const auto profs = profiles_of(x, dims);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        const double nd = static_cast<double>(dims[i]);
        for (std::size_t j = 0; j < deltas.size(); ++j) {
            const Index cut = static_cast<Index>(std::floor(deltas[j] * nd));
            if (cut + 1 > dims[i]) continue;
            double acc = 0.0;
            for (Index k = cut; k < dims[i]; ++k) acc += std::pow(profs[i].sigma(k), p);
            e.table[i][j] = std::pow(acc, 1.0 / p) / std::pow(nd, 1.0 / p);
        }
    }
    e.headline = corner_headline(e);
    e.trend    = per_delta_trend(e);
    return e;
}

}  // namespace gltlab
