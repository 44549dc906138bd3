#include "gltlab/distribution.hpp"

#include "gltlab/parallel.hpp"
#include "gltlab/trend.hpp"

#include <cmath>
#include <sstream>

namespace gltlab {

TestFunc TestFunc::hat(double center, double width) {
    if (!(width > 0.0)) throw Error("TestFunc::hat: width must be positive");
    return {Kind::hat, center, width};
}

TestFunc TestFunc::gaussian(double center, double scale) {
    if (!(scale > 0.0)) throw Error("TestFunc::gaussian: scale must be positive");
    return {Kind::gaussian, center, scale};
}

TestFunc TestFunc::poly_cutoff(double degree, double radius) {
    if (!(degree > 0.0) || !(radius > 0.0))
        throw Error("TestFunc::poly_cutoff: degree and radius must be positive");
    return {Kind::poly_cutoff, degree, radius};
}

double TestFunc::operator()(double t) const {
    switch (kind) {
        case Kind::hat: return std::max(0.0, 1.0 - std::abs(t - p1) / p2);
        case Kind::gaussian: {
            const double u = (t - p1) / p2;
            if (std::abs(u) > 6.0) return 0.0;
            return std::max(0.0, std::exp(-0.5 * u * u) - std::exp(-18.0));
        }
        case Kind::poly_cutoff: return std::max(0.0, 1.0 - std::pow(std::abs(t) / p2, p1));
    }
    return 0.0;
}

std::string TestFunc::id() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::hat: os << "hat(" << p1 << ";" << p2 << ")"; break;
        case Kind::gaussian: os << "gaussian(" << p1 << ";" << p2 << ")"; break;
        case Kind::poly_cutoff: os << "poly_cutoff(" << p1 << ";" << p2 << ")"; break;
    }
    return os.str();
}

double ergodic_sum(const SingularProfile& prof, const std::function<double(double)>& f) {
    if (prof.n < 1) throw Error("ergodic_sum: empty profile");
    double acc = 0.0;
    for (Index i = 0; i < prof.n; ++i) acc += f(prof.sigma(i));
    return acc / static_cast<double>(prof.n);
}

double ergodic_sum(const SingularProfile& prof, const TestFunc& f) {
    return ergodic_sum(prof, std::function<double(double)>([&f](double t) { return f(t); }));
}

double symbol_integral(const SymbolExpr& s, const std::function<double(double)>& f, int grid) {
    if (grid < 128) throw Error("symbol_integral: grid must be >= 128 points per axis");
    const RMatrix a = sample_abs_grid(s, grid);
    double acc = 0.0;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) acc += f(a(i, j));
    // cell area / (2 pi) = 1 / grid^2
    return acc / (static_cast<double>(grid) * static_cast<double>(grid));
}

double symbol_integral(const SymbolExpr& s, const TestFunc& f, int grid) {
    return symbol_integral(s, std::function<double(double)>([&f](double t) { return f(t); }), grid);
}

DistributionReport distribution_check(const MatrixSeq& x, const SymbolExpr& s,
                                      std::span<const TestFunc> funcs, std::span<const Index> dims,
                                      int grid) {
    if (funcs.size() < 3) throw Error("distribution_check: needs at least 3 test functions");
    check_dims_increasing(dims, 4);

    DistributionReport r;
    r.dims.assign(dims.begin(), dims.end());
    r.funcs.assign(funcs.begin(), funcs.end());
    r.grid = grid;

    // one |s| grid shared by all test functions
    const RMatrix a     = sample_abs_grid(s, grid);
    const double  cells = static_cast<double>(grid) * static_cast<double>(grid);
    r.rhs.resize(funcs.size());
    for (std::size_t q = 0; q < funcs.size(); ++q) {
        double acc = 0.0;
        for (Index i = 0; i < a.rows(); ++i)
            for (Index j = 0; j < a.cols(); ++j) acc += funcs[q](a(i, j));
        r.rhs[q] = acc / cells;
    }

    r.lhs.assign(dims.size(), std::vector<double>(funcs.size(), 0.0));
    r.residual.assign(dims.size(), std::vector<double>(funcs.size(), 0.0));
    parallel_for(dims.size(), [&](std::size_t i) {
        const SingularProfile prof = svd_profile(x.at(dims[i]));
        for (std::size_t q = 0; q < funcs.size(); ++q) {
            r.lhs[i][q]      = ergodic_sum(prof, funcs[q]);
            r.residual[i][q] = std::abs(r.lhs[i][q] - r.rhs[q]);
        }
    });

    r.verdict.resize(funcs.size());
    const std::size_t start = top_half_start(dims.size());
    for (std::size_t q = 0; q < funcs.size(); ++q) {
        std::vector<double> tail;
        std::vector<Index>  tail_dims;
        for (std::size_t i = start; i < dims.size(); ++i) {
            tail.push_back(r.residual[i][q]);
            tail_dims.push_back(dims[i]);
        }
        r.verdict[q] = non_increasing_fractions(tail, tail_dims);
    }
    return r;
}

IsometryRecord isometry_check(const MatrixSeq& x, const SymbolExpr& s, double p,
                              std::span<const Index> dims, std::span<const double> deltas,
                              int grid) {
    IsometryRecord rec;
    rec.p = p;
    if (p == kInf) {
        rec.estimate    = qw_estimate(x, dims, deltas);
        rec.symbol_side = lp_norm(s, kInf, grid);
    } else {
        rec.estimate    = qwp_estimate(x, dims, deltas, p);
        rec.symbol_side = lp_norm(s, p, grid) / phi_p_factor(p);
    }
    rec.headline = rec.estimate.headline;
    const double denom = std::max(std::abs(rec.symbol_side), 1e-15);
    rec.rel_gap        = std::abs(rec.headline - rec.symbol_side) / denom;
    return rec;
}

}  // namespace gltlab
