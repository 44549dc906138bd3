#include "gltlab/precond.hpp"

#include "gltlab/singular.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace gltlab;

namespace {

TrigPoly two_plus_cos() {
    TrigPoly f = TrigPoly::constant(2.0);
    f.set(1, 0.5);
    f.set(-1, 0.5);
    return f;
}

bool matrix_close(const CMatrix& a, const CMatrix& b, double tol) {
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

TEST_SUITE_BEGIN("precond");

TEST_CASE("fourier matrices are unitary") {
    for (Index n : {1, 2, 3, 5, 8, 64}) {
        const CMatrix& f = fourier(n);
        CHECK(is_unitary(f));
        CHECK((f.adjoint() * f - CMatrix::Identity(n, n)).norm() <=
              1e-12 * std::sqrt(static_cast<double>(n)));
    }
    // independent small-n cross-check of the entries
    const CMatrix& f2 = fourier(2);
    const double   s  = 1.0 / std::sqrt(2.0);
    CHECK(f2(0, 0).real() == doctest::Approx(s));
    CHECK(f2(1, 1).real() == doctest::Approx(-s));
}

TEST_CASE("block_fourier layout") {
    const CMatrix u = block_fourier(4, 2);
    CHECK(matrix_close(u.block(0, 0, 2, 2), fourier(2), 1e-15));
    CHECK(matrix_close(u.block(2, 2, 2, 2), fourier(2), 1e-15));
    CHECK(u.block(0, 2, 2, 2).cwiseAbs().maxCoeff() == 0.0);

    // n = m: m copies of the 1x1 Fourier block, the identity
    CHECK(matrix_close(block_fourier(5, 5), CMatrix::Identity(5, 5), 1e-15));

    // n = 7, m = 3: three F_2 blocks and a trailing F_1
    const CMatrix v = block_fourier(7, 3);
    CHECK(is_unitary(v));
    for (Index i = 0; i < 3; ++i) CHECK(matrix_close(v.block(2 * i, 2 * i, 2, 2), fourier(2), 1e-15));
    CHECK(v(6, 6) == Complex(1.0, 0.0));

    CHECK_THROWS_AS(block_fourier(2, 3), Error);
}

TEST_CASE("project_unitary fixes the algebra and is idempotent") {
    std::mt19937_64 rng(17);
    const Index n = 24;
    const CMatrix u = oracles::random_unitary(n, rng);

    // members of the algebra are fixed points
    CVector d(n);
    std::normal_distribution<double> g;
    for (Index i = 0; i < n; ++i) d(i) = Complex(g(rng), g(rng));
    const CMatrix member = u * d.asDiagonal() * u.adjoint();
    CHECK(matrix_close(project_unitary(member, u), member, 1e-10));

    CHECK(matrix_close(project_unitary(CMatrix::Identity(n, n), u), CMatrix::Identity(n, n), 1e-10));

    const CMatrix a = oracles::random_complex(n, rng);
    const CMatrix p = project_unitary(a, u);
    CHECK(matrix_close(project_unitary(p, u), p, 1e-10));

    // Frobenius and spectral contraction
    CHECK(p.norm() <= a.norm() + 1e-12);
    CHECK(spectral_norm(p) <= spectral_norm(a) + 1e-9);

    CHECK_THROWS_AS(project_unitary(a, CMatrix(2.0 * u)), Error);
    CHECK_THROWS_AS(project_unitary(a, oracles::random_unitary(n + 1, rng)), Error);
}

TEST_CASE("circulant projection of the golden Toeplitz matrix") {
    const CMatrix t = toeplitz(two_plus_cos(), 4);
    const CMatrix c = circulant_project(t);

    // frozen first column and both projection routes
    CHECK(c(0, 0).real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c(1, 0).real() == doctest::Approx(0.375).epsilon(1e-12));
    CHECK(c(2, 0).real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c(3, 0).real() == doctest::Approx(0.375).epsilon(1e-12));

    CHECK(matrix_close(c, project_unitary(t, fourier(4)), 1e-9));

    // explicit diag(F* T F) oracle
    const CMatrix& f = fourier(4);
    const CMatrix  o = f * CMatrix((f.adjoint() * t * f).diagonal().asDiagonal()) * f.adjoint();
    CHECK(matrix_close(c, o, 1e-10));
}

TEST_CASE("circulant projection closed forms") {
    // a circulant is its own projection
    CMatrix circ(3, 3);
    circ << Complex(1, 0), Complex(2, 1), Complex(3, -1),
            Complex(3, -1), Complex(1, 0), Complex(2, 1),
            Complex(2, 1), Complex(3, -1), Complex(1, 0);
    CHECK(matrix_close(circulant_project(circ), circ, 1e-14));

    CMatrix e11 = CMatrix::Zero(4, 4);
    e11(0, 0) = 1.0;
    CHECK(matrix_close(circulant_project(e11), CMatrix(0.25 * CMatrix::Identity(4, 4)), 1e-14));
}

TEST_CASE("circulant projection agrees with the Fourier projection") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<Index> dim(2, 64);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix a = oracles::random_complex(dim(rng), rng);
        CHECK(matrix_close(circulant_project(a), project_unitary(a, fourier(a.rows())), 1e-9));
    }
}

TEST_CASE("lt_precondition is the blockwise circulant correction") {
    // identity blocks are circulant, so the delta vanishes
    const LtDescriptor ones{ScalarFunc::constant(1.0), TrigPoly::constant(1.0), 3};
    auto [p0, d0] = lt_precondition(ones, 9);
    CHECK(d0.cwiseAbs().maxCoeff() <= 1e-12);

    const LtDescriptor d{ScalarFunc::identity(), two_plus_cos(), 2};
    auto [pre, delta] = lt_precondition(d, 4);
    const CMatrix t2   = toeplitz(two_plus_cos(), 2);
    const CMatrix base = circulant_project(t2) - t2;
    for (Index i = 1; i <= 2; ++i) {
        const double scale = static_cast<double>(i) / 2.0;
        CHECK(matrix_close(delta.block(2 * (i - 1), 2 * (i - 1), 2, 2), scale * base, 1e-10));
    }
}

TEST_CASE("per-block outliers shrink as a fraction under the sqrt schedule") {
    CHECK(sqrt_block_schedule(64) == 8);
    CHECK(sqrt_block_schedule(128) == 11);
    CHECK(sqrt_block_schedule(1023) == 31);
    CHECK(sqrt_block_schedule(1024) == 32);

    auto seqs = lt_precondition_seq(ScalarFunc::identity(), two_plus_cos(), sqrt_block_schedule);
    const std::vector<Index> dims{64, 128, 256};
    ClusterReport r = outlier_counts(seqs.delta, dims, std::vector<double>{0.1});
    std::vector<double> fr;
    for (std::size_t i = 0; i < dims.size(); ++i)
        fr.push_back(static_cast<double>(r.counts[i][0]) / static_cast<double>(dims[i]));
    CHECK(fr[1] < fr[0]);
    CHECK(fr[2] < fr[1]);
}

TEST_CASE("projection inherits Frobenius smallness on golden deltas") {
    // the weak-clustered golden delta of the block construction
    auto seqs = lt_precondition_seq(ScalarFunc::identity(), two_plus_cos(), sqrt_block_schedule);
    std::mt19937_64 rng(3);
    for (Index n : {36, 100}) {
        const CMatrix delta = seqs.delta.at(n);
        const CMatrix u     = oracles::random_unitary(n, rng);
        const CMatrix p     = project_unitary(delta, u);
        CHECK(p.squaredNorm() <= delta.squaredNorm() + 1e-12);

        // outlier-fraction surrogate at each eps
        const SingularProfile sp = svd_profile(p);
        const SingularProfile sd = svd_profile(delta);
        for (double eps : {0.5, 0.2, 0.1}) {
            const double frac_p = static_cast<double>(count_at_least(sp, eps)) / static_cast<double>(n);
            const double frac_d =
                static_cast<double>(count_at_least(sd, eps / 2.0)) / static_cast<double>(n);
            CHECK(frac_p <= frac_d + 0.02);
        }
    }
}

TEST_CASE("words evaluate on matrices and symbols") {
    const Word g0 = Word::generator(0, "g0");
    const Word g1 = Word::generator(1, "g1");
    // (2 + (g0 + g1)/2)^2
    const Word base = Word::add(Word::constant(2.0),
                                Word::scale(0.5, Word::add(g0, g1)));
    const Word word = Word::mul(base, base);

    const CMatrix l = toeplitz(TrigPoly::harmonic(1), 5);
    const CMatrix r = toeplitz(TrigPoly::harmonic(-1), 5);
    const std::vector<CMatrix> gens{l, r};
    const CMatrix t = toeplitz(two_plus_cos(), 5);
    CHECK(matrix_close(word.eval(gens, 5), CMatrix(t * t), 1e-12));

    const std::vector<SymbolExpr> symbols{
        SymbolExpr::atom(ScalarFunc::constant(1.0), TrigPoly::harmonic(1)),
        SymbolExpr::atom(ScalarFunc::constant(1.0), TrigPoly::harmonic(-1))};
    const SymbolExpr ws = word.symbol(symbols);
    const TrigPoly   sq = two_plus_cos() * two_plus_cos();
    for (double theta : {0.0, 1.0, -2.0}) {
        CHECK(std::abs(ws.eval(0.5, theta) - sq(theta)) <= 1e-12);
    }

    const Word adj = Word::adjoint(g0);
    CHECK(matrix_close(adj.eval(gens, 5), CMatrix(l.adjoint()), 1e-15));
    CHECK(word.max_generator_index() == 1);
}

TEST_CASE("korovkin harness on the identity generator") {
    const Generator id{"one", SymbolExpr::constant(1.0), identity_seq()};
    KorovkinOptions opt;
    opt.dims     = {16, 32, 64, 128};
    opt.eps_grid = {0.5, 0.1};

    const std::vector<std::pair<std::string, Word>> elements{
        {"3*one", Word::scale(3.0, Word::generator(0, "one"))}};
    const PrecondReport rep = korovkin_run(std::vector<Generator>{id}, elements,
                                           UnitaryFamily::fourier_family(), opt);
    CHECK(rep.hypotheses_pass);
    for (const auto& h : rep.hypotheses) CHECK(h.label == ClusterLabel::strong);
    REQUIRE(rep.elements.size() == 1);
    CHECK(rep.elements[0].label == ClusterLabel::strong);
    for (double f2 : rep.elements[0].report.frob2) CHECK(f2 <= 1e-20);
}

TEST_CASE("korovkin harness on the shift generators") {
    const std::vector<Generator> gens{
        {"e+", SymbolExpr::atom(ScalarFunc::constant(1.0), TrigPoly::harmonic(1)),
         toeplitz_seq(TrigPoly::harmonic(1))},
        {"e-", SymbolExpr::atom(ScalarFunc::constant(1.0), TrigPoly::harmonic(-1)),
         toeplitz_seq(TrigPoly::harmonic(-1))}};

    KorovkinOptions opt;
    opt.dims       = {32, 64, 128, 256};
    opt.eps_grid   = {0.5, 0.2, 0.1};
    opt.norm_bound = 1.0;

    const Word base = Word::add(Word::constant(2.0),
                                Word::scale(0.5, Word::add(Word::generator(0, "e+"),
                                                           Word::generator(1, "e-"))));
    const std::vector<std::pair<std::string, Word>> elements{{"(2+cos)^2", Word::mul(base, base)}};

    const PrecondReport rep = korovkin_run(gens, elements, UnitaryFamily::fourier_family(), opt);
    CHECK(rep.hypotheses_pass);
    REQUIRE(rep.hypotheses.size() == 3);  // two generators plus the gram sum
    for (const auto& h : rep.hypotheses) {
        CHECK((h.label == ClusterLabel::weak || h.label == ClusterLabel::strong));
    }
    CHECK((rep.elements[0].label == ClusterLabel::weak ||
           rep.elements[0].label == ClusterLabel::strong));
    CHECK(rep.norm_bound == 1.0);
    for (double g : rep.generator_norms) CHECK(g <= 1.0 + 1e-9);
}

TEST_CASE("korovkin refuses unbounded generators") {
    // shift plus a rotated all-ones matrix: the spectral norm grows linearly
    const UnitaryFamily family = UnitaryFamily::fourier_family();
    MatrixSeq bad{"shift+ones", [](Index n) {
                      const CMatrix& u = fourier(n);
                      const CMatrix ones = CMatrix::Constant(n, n, Complex(1.0, 0.0));
                      return CMatrix(toeplitz(TrigPoly::harmonic(1), n) + u * ones * u.adjoint());
                  }};
    const std::vector<Generator> gens{
        {"bad", SymbolExpr::atom(ScalarFunc::constant(1.0), TrigPoly::harmonic(1)), bad}};

    KorovkinOptions opt;
    opt.dims     = {16, 32, 64, 128};
    opt.eps_grid = {0.5, 0.1};

    CHECK_THROWS_WITH_AS(
        korovkin_run(gens, {}, family, opt),
        doctest::Contains("not norm bounded"), Error);
}

TEST_CASE("strong clustering of the circulant correction") {
    MatrixSeq delta{"circ delta", [](Index n) {
                        const CMatrix t = toeplitz(two_plus_cos(), n);
                        return CMatrix(circulant_project(t) - t);
                    }};
    const std::vector<Index> dims{64, 128, 256, 512};
    ClusterReport r = outlier_counts(delta, dims, std::vector<double>{0.1});
    classify(r);
    CHECK(r.classification[0] == ClusterLabel::strong);
    for (std::size_t i = 0; i < dims.size(); ++i) CHECK(r.counts[i][0] == 2);
    CHECK(frobenius_criterion(r) == FrobeniusEvidence::strong_evidence);
}

TEST_SUITE_END();
