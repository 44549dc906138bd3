#pragma once
//
// Project     : gltlab
// Module      : distribution
// Description : ergodic test-function sums against symbol integrals, and the
//               seminorm-vs-norm comparison for distributed sequences
//

#include "gltlab/acs.hpp"
#include "gltlab/sequences.hpp"
#include "gltlab/singular.hpp"
#include "gltlab/symbol.hpp"
#include "gltlab/types.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace gltlab {

// Continuous, compactly supported test functions with sup <= 1.
//   hat(center, width)      : max(0, 1 - |t - center| / width)
//   gaussian(center, scale) : exp(-u^2/2) - exp(-18) on |u| <= 6, u = (t-c)/s,
//                             clipped at 0 (continuous at the cut)
//   poly_cutoff(degree, r)  : max(0, 1 - (|t| / r)^degree)
struct TestFunc {
    enum class Kind { hat, gaussian, poly_cutoff };

    Kind   kind;
    double p1 = 0.0;  // center / center / degree
    double p2 = 1.0;  // width / scale / radius

    static TestFunc hat(double center, double width);
    static TestFunc gaussian(double center, double scale);
    static TestFunc poly_cutoff(double degree, double radius);

    double operator()(double t) const;
    std::string id() const;
};

/// (1/n) sum_i F(sigma_i).
double ergodic_sum(const SingularProfile& prof, const TestFunc& f);
double ergodic_sum(const SingularProfile& prof, const std::function<double(double)>& f);

/// (1/2pi) * midpoint quadrature of F(|s|) over [0,1] x [-pi,pi]; grid >= 128.
double symbol_integral(const SymbolExpr& s, const TestFunc& f, int grid = 512);
double symbol_integral(const SymbolExpr& s, const std::function<double(double)>& f, int grid = 512);

struct DistributionReport {
    std::vector<Index>    dims;
    std::vector<TestFunc> funcs;
    std::vector<double>   rhs;                    // per func
    std::vector<std::vector<double>> lhs;         // [dim][func]
    std::vector<std::vector<double>> residual;    // [dim][func]
    std::vector<bool> verdict;  // per func: residual non-increasing over top half
    int grid = 512;
};

/// Requires at least 3 test functions and at least 4 dims.
DistributionReport distribution_check(const MatrixSeq& x, const SymbolExpr& s,
                                      std::span<const TestFunc> funcs, std::span<const Index> dims,
                                      int grid = 512);

// Estimator headline against the symbol-side value:
//   p = inf : qw headline vs lp_norm(s, inf)
//   finite  : qwp headline vs (2pi)^{-1/p} * lp_norm(s, p)
struct IsometryRecord {
    double p = kInf;
    SeminormEstimate estimate;
    double headline    = 0.0;
    double symbol_side = 0.0;
    double rel_gap     = 0.0;  // |headline - symbol_side| / max(|symbol_side|, eps)
};

IsometryRecord isometry_check(const MatrixSeq& x, const SymbolExpr& s, double p,
                              std::span<const Index> dims, std::span<const double> deltas,
                              int grid = 512);

}  // namespace gltlab
