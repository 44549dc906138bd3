#include "gltlab/distribution.hpp"

#include "gltlab/precond.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace gltlab;

namespace {

constexpr double kPi = oracles::kPi;

TrigPoly two_plus_cos() {
    TrigPoly f = TrigPoly::constant(2.0);
    f.set(1, 0.5);
    f.set(-1, 0.5);
    return f;
}

SymbolExpr atom_two_plus_cos() { return SymbolExpr::atom(ScalarFunc::constant(1.0), two_plus_cos()); }

// effectively 1 on [0, r/20 * 20] = [0, r]: (t/(20 r))^32 underflows the
// double format on the plateau
TestFunc wide_one(double upto) { return TestFunc::poly_cutoff(32.0, 20.0 * upto); }

SingularProfile profile_of(std::vector<double> sigma_desc) {
    SingularProfile p;
    p.n     = static_cast<Index>(sigma_desc.size());
    p.sigma = Eigen::Map<RVector>(sigma_desc.data(), static_cast<Index>(sigma_desc.size()));
    return p;
}

std::vector<TestFunc> golden_family() {
    return {TestFunc::hat(2.0, 1.0), TestFunc::gaussian(1.0, 0.5), TestFunc::poly_cutoff(4.0, 3.0)};
}

}  // namespace

TEST_SUITE_BEGIN("distribution");

TEST_CASE("test functions are continuous bumps") {
    const TestFunc h = TestFunc::hat(1.0, 0.5);
    CHECK(h(1.0) == 1.0);
    CHECK(h(0.5) == 0.0);
    CHECK(h(0.75) == doctest::Approx(0.5));

    const TestFunc g = TestFunc::gaussian(0.0, 1.0);
    CHECK(g(0.0) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(g(6.0) == 0.0);
    CHECK(g(5.9999) == doctest::Approx(0.0).epsilon(1e-6));

    const TestFunc p = TestFunc::poly_cutoff(4.0, 3.0);
    CHECK(p(0.0) == 1.0);
    CHECK(p(3.0) == 0.0);
    CHECK(p(1.5) == doctest::Approx(1.0 - 1.0 / 16.0));
}

TEST_CASE("ergodic_sum closed forms") {
    const SingularProfile two = profile_of({1.0, 0.0});
    CHECK(ergodic_sum(two, TestFunc::hat(1.0, 0.5)) == doctest::Approx(0.5));

    const SingularProfile id = svd_profile(CMatrix::Identity(7, 7));
    CHECK(ergodic_sum(id, wide_one(1.0)) == 1.0);
    const TestFunc g = TestFunc::gaussian(1.0, 0.5);
    CHECK(ergodic_sum(id, g) == doctest::Approx(g(1.0)).epsilon(1e-14));
}

TEST_CASE("symbol_integral closed forms") {
    const SymbolExpr one = SymbolExpr::constant(1.0);
    for (const TestFunc& f : golden_family())
        CHECK(symbol_integral(one, f, 256) == doctest::Approx(f(1.0)).epsilon(1e-10));

    const SymbolExpr s = atom_two_plus_cos();
    CHECK(symbol_integral(s, wide_one(3.0), 256) == doctest::Approx(1.0).epsilon(1e-12));

    // (1/2pi) integral of (1 - |cos theta|) = 1 - 2/pi
    const double v = symbol_integral(s, TestFunc::hat(2.0, 1.0), 512);
    CHECK(v == doctest::Approx(1.0 - 2.0 / kPi).epsilon(1e-5));
}

TEST_CASE("ergodic_sum and symbol_integral are linear") {
    const SingularProfile prof = profile_of({2.5, 1.5, 0.5});
    const TestFunc f = TestFunc::hat(2.0, 1.0);
    const TestFunc g = TestFunc::gaussian(1.0, 0.5);
    const double alpha = 0.7, beta = -1.3;
    auto combo = [&](double t) { return alpha * f(t) + beta * g(t); };

    const double lhs = ergodic_sum(prof, combo);
    const double rhs = alpha * ergodic_sum(prof, f) + beta * ergodic_sum(prof, g);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));

    const SymbolExpr s = atom_two_plus_cos();
    const double il = symbol_integral(s, std::function<double(double)>(combo), 128);
    const double ir = alpha * symbol_integral(s, f, 128) + beta * symbol_integral(s, g, 128);
    CHECK(il == doctest::Approx(ir).epsilon(1e-12));
}

TEST_CASE("distribution_check against the closed-form Toeplitz spectra") {
    const std::vector<Index> dims{32, 64, 128, 256};
    const auto funcs = golden_family();

    const DistributionReport id =
        distribution_check(identity_seq(), SymbolExpr::constant(1.0), funcs, dims, 256);
    for (std::size_t i = 0; i < dims.size(); ++i)
        for (std::size_t q = 0; q < funcs.size(); ++q) CHECK(id.residual[i][q] <= 1e-10);
    for (bool v : id.verdict) CHECK(v);

    const DistributionReport toe =
        distribution_check(toeplitz_seq(two_plus_cos()), atom_two_plus_cos(), funcs, dims, 512);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        // the measured side equals the closed-form spectrum side to SVD accuracy
        const auto eig = oracles::tridiag_toeplitz_eigs(2.0, 0.5, dims[i]);
        for (std::size_t q = 0; q < funcs.size(); ++q) {
            double oracle = 0.0;
            for (double e : eig) oracle += funcs[q](e);
            oracle /= static_cast<double>(dims[i]);
            CHECK(toe.lhs[i][q] == doctest::Approx(oracle).epsilon(1e-9));
        }
    }
    for (std::size_t q = 0; q < funcs.size(); ++q)
        CHECK(toe.residual.back()[q] < toe.residual.front()[q]);

    CHECK_THROWS_AS(distribution_check(identity_seq(), SymbolExpr::constant(1.0),
                                       std::vector<TestFunc>{TestFunc::hat(1, 1)}, dims, 256),
                    Error);
}

TEST_CASE("distribution of the locally-block sequence") {
    // blocks a(i/m) T_k with m = floor(sqrt(n)): spectra enumerate directly
    auto lt_of = [](Index n) {
        const Index m = sqrt_block_schedule(n);
        return lt_block({ScalarFunc::identity(), two_plus_cos(), m}, n);
    };
    const MatrixSeq seq{"lt", lt_of};
    const SymbolExpr sym = SymbolExpr::atom(ScalarFunc::identity(), two_plus_cos());
    const auto funcs = golden_family();

    const std::vector<Index> dims{64, 128, 256, 1024};
    const DistributionReport rep = distribution_check(seq, sym, funcs, dims, 512);

    for (std::size_t i = 0; i < dims.size(); ++i) {
        const Index m = sqrt_block_schedule(dims[i]);
        const auto sv = oracles::lt_block_singulars([](double x) { return x; }, 2.0, 0.5, m, dims[i]);
        for (std::size_t q = 0; q < funcs.size(); ++q) {
            double oracle = 0.0;
            for (double s : sv) oracle += funcs[q](s);
            oracle /= static_cast<double>(dims[i]);
            CHECK(rep.lhs[i][q] == doctest::Approx(oracle).epsilon(1e-9));
        }
    }
    for (std::size_t q = 0; q < funcs.size(); ++q)
        CHECK(rep.residual.back()[q] < rep.residual.front()[q]);
}

TEST_CASE("isometry comparison on closed forms") {
    const std::vector<Index>  dims{16, 32, 64, 128};
    const std::vector<double> deltas{0.1, 0.05};

    const IsometryRecord id =
        isometry_check(identity_seq(), SymbolExpr::constant(1.0), kInf, dims, deltas, 256);
    CHECK(id.headline == 1.0);
    CHECK(id.symbol_side == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(id.rel_gap <= 1e-12);

    const std::vector<Index> tdims{64, 128, 256};
    const IsometryRecord sup = isometry_check(toeplitz_seq(two_plus_cos()), atom_two_plus_cos(),
                                              kInf, tdims, std::vector<double>{0.02, 0.01}, 512);
    CHECK(sup.symbol_side == doctest::Approx(3.0).epsilon(5e-5));
    const auto eig = oracles::tridiag_toeplitz_eigs(2.0, 0.5, 256);
    CHECK(sup.headline == doctest::Approx(eig[2]).epsilon(1e-9));  // floor(0.01*256) = 2

    const IsometryRecord tr = isometry_check(toeplitz_seq(two_plus_cos()), atom_two_plus_cos(), 1.0,
                                             tdims, std::vector<double>{0.0}, 512);
    CHECK(tr.symbol_side == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(tr.headline == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(tr.rel_gap <= 1e-6);
}

TEST_CASE("Toeplitz seminorm estimates stay below the symbol sup") {
    const std::vector<Index>  dims{32, 64, 128};
    const std::vector<double> deltas{0.05, 0.01};
    for (const TrigPoly& f : {two_plus_cos(), two_plus_cos() * two_plus_cos()}) {
        const SymbolExpr s = SymbolExpr::atom(ScalarFunc::constant(1.0), f);
        const double sup = lp_norm(s, kInf, 512);
        const SeminormEstimate q = qw_estimate(toeplitz_seq(f), dims, deltas);
        CHECK(q.headline <= sup + 1e-6);
    }
}

TEST_SUITE_END();
