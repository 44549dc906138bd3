#include "gltlab/sequences.hpp"

#include "gltlab/singular.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace gltlab;

namespace {

TrigPoly two_plus_cos() {
    TrigPoly f = TrigPoly::constant(2.0);
    f.set(1, 0.5);
    f.set(-1, 0.5);
    return f;
}

bool matrix_close(const CMatrix& a, const CMatrix& b, double tol = 1e-12) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

TEST_SUITE_BEGIN("sequences");

TEST_CASE("toeplitz entries follow the coefficient rule") {
    const CMatrix t = toeplitz(two_plus_cos(), 2);
    CMatrix expect(2, 2);
    expect << 2.0, 0.5, 0.5, 2.0;
    CHECK(matrix_close(t, expect));

    CHECK(matrix_close(toeplitz(TrigPoly::constant(1.0), 5), CMatrix::Identity(5, 5)));

    const CMatrix shift = toeplitz(TrigPoly::harmonic(1), 3);
    CMatrix lower = CMatrix::Zero(3, 3);
    lower(1, 0) = lower(2, 1) = 1.0;
    CHECK(matrix_close(shift, lower));

    CHECK_THROWS_AS(toeplitz(two_plus_cos(), 0), Error);
}

TEST_CASE("toeplitz is Hermitian exactly for real-valued symbols") {
    for (Index n : {4, 16, 64}) {
        const CMatrix t = toeplitz(two_plus_cos(), n);
        CHECK(matrix_close(t, t.adjoint()));
    }
    const CMatrix s = toeplitz(TrigPoly::harmonic(1), 8);
    CHECK_FALSE(matrix_close(s, s.adjoint()));
}

TEST_CASE("diag_sample evaluates on the grid i/n") {
    const CMatrix d = diag_sample(ScalarFunc::identity(), 4);
    CMatrix expect = CMatrix::Zero(4, 4);
    expect(0, 0) = 0.25;
    expect(1, 1) = 0.5;
    expect(2, 2) = 0.75;
    expect(3, 3) = 1.0;
    CHECK(matrix_close(d, expect));

    CHECK(matrix_close(diag_sample(ScalarFunc::constant(1.0), 5), CMatrix::Identity(5, 5)));

    // a(x) = 1/sqrt(x) is admissible: the grid never samples 0
    const CMatrix g = diag_sample(ScalarFunc::parse("1/sqrt(x)"), 3);
    CHECK(g(0, 0).real() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(g(1, 1).real() == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
    CHECK(g(2, 2).real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("diag_sample reports the offending sample point") {
    const ScalarFunc bad = ScalarFunc::parse("1/(x - 0.5)");
    try {
        diag_sample(bad, 4);  // i = 2 hits x = 0.5
        FAIL("expected an evaluation error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("0.5") != std::string::npos);
    }
}

TEST_CASE("lt_block lays out scaled blocks plus a zero tail") {
    const LtDescriptor d{ScalarFunc::identity(), two_plus_cos(), 2};
    const CMatrix a = lt_block(d, 4);
    CMatrix expect = CMatrix::Zero(4, 4);
    expect.block(0, 0, 2, 2) << 1.0, 0.25, 0.25, 1.0;
    expect.block(2, 2, 2, 2) << 2.0, 0.5, 0.5, 2.0;
    CHECK(matrix_close(a, expect));

    const LtDescriptor ones{ScalarFunc::constant(1.0), TrigPoly::constant(1.0), 3};
    CMatrix id6 = CMatrix::Zero(7, 7);
    id6.topLeftCorner(6, 6).setIdentity();
    CHECK(matrix_close(lt_block(ones, 7), id6));

    const LtDescriptor d3{ScalarFunc::identity(), two_plus_cos(), 3};
    const CMatrix b = lt_block(d3, 7);
    CMatrix t2(2, 2);
    t2 << 2.0, 0.5, 0.5, 2.0;
    for (Index i = 1; i <= 3; ++i) {
        const double scale = static_cast<double>(i) / 3.0;
        CHECK(matrix_close(b.block(2 * (i - 1), 2 * (i - 1), 2, 2), scale * t2));
    }
    CHECK(b.row(6).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(lt_block(d3, 2), Error);
}

TEST_CASE("lt_block singular values are the scaled block spectra") {
    const LtDescriptor d{ScalarFunc::identity(), two_plus_cos(), 3};
    const Index n = 7;
    const SingularProfile prof = svd_profile(lt_block(d, n));
    const auto expect = oracles::lt_block_singulars([](double x) { return x; }, 2.0, 0.5, 3, n);
    REQUIRE(prof.sigma.size() == static_cast<Index>(expect.size()));
    for (Index i = 0; i < prof.sigma.size(); ++i)
        CHECK(prof.sigma(i) == doctest::Approx(expect[static_cast<std::size_t>(i)]).epsilon(1e-10));
}

TEST_CASE("glt_build reduces to its factors") {
    const std::vector<GltTerm> one_toeplitz{{ScalarFunc::constant(1.0), two_plus_cos()}};
    CHECK(matrix_close(glt_build(one_toeplitz, 2), toeplitz(two_plus_cos(), 2)));

    const std::vector<GltTerm> one_diag{{ScalarFunc::identity(), TrigPoly::constant(1.0)}};
    CHECK(matrix_close(glt_build(one_diag, 4), diag_sample(ScalarFunc::identity(), 4)));

    const std::vector<GltTerm> shifts{{ScalarFunc::constant(1.0), TrigPoly::harmonic(1)},
                                      {ScalarFunc::constant(1.0), TrigPoly::harmonic(-1)}};
    CMatrix expect = CMatrix::Zero(3, 3);
    expect(0, 1) = expect(1, 0) = expect(1, 2) = expect(2, 1) = 1.0;
    CHECK(matrix_close(glt_build(shifts, 3), expect));

    CHECK_THROWS_AS(glt_build({}, 3), Error);
}

TEST_CASE("sequence algebra is pointwise in n") {
    const MatrixSeq x = toeplitz_seq(TrigPoly::harmonic(1));

    const CMatrix adj = seq_adjoint(x).at(3);
    CMatrix upper = CMatrix::Zero(3, 3);
    upper(0, 1) = upper(1, 2) = 1.0;
    CHECK(matrix_close(adj, upper));

    const MatrixSeq zero = seq_add(x, seq_scale(-1.0, x));
    CHECK(matrix_close(zero.at(5), CMatrix::Zero(5, 5)));

    // T(e^{i theta}) T(e^{-i theta}) at n = 3: the first row of the lower
    // shift is zero, so the product is diag(0, 1, 1)
    const MatrixSeq prod = seq_mul(x, toeplitz_seq(TrigPoly::harmonic(-1)));
    CMatrix expect = CMatrix::Zero(3, 3);
    expect(1, 1) = expect(2, 2) = 1.0;
    CHECK(matrix_close(prod.at(3), expect));

    const MatrixSeq twice = seq_adjoint(seq_adjoint(x));
    for (Index n : {2, 5, 9}) CHECK(matrix_close(twice.at(n), x.at(n)));
}

TEST_CASE("builders are deterministic") {
    const MatrixSeq g = glt_seq({{ScalarFunc::parse("sin(x)"), two_plus_cos()}});
    const CMatrix a = g.at(17);
    const CMatrix b = g.at(17);
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("leading_ones_seq matches its construction") {
    const MatrixSeq b = leading_ones_seq(8);
    const CMatrix m = b.at(20);
    CHECK(m.diagonal().head(2).isOnes());
    CHECK(m.diagonal().tail(18).isZero());
}

TEST_SUITE_END();
