#include "gltlab/sequences.hpp"

#include <sstream>
#include <utility>

namespace gltlab {

CMatrix MatrixSeq::at(Index n) const {
    if (n < 1) throw Error("sequence \"" + label + "\": dimension must be >= 1, got " + std::to_string(n));
    CMatrix a = build(n);
    if (a.rows() != n || a.cols() != n) {
        std::ostringstream os;
        os << "sequence \"" << label << "\": builder returned a " << a.rows() << "x" << a.cols()
           << " matrix for n = " << n;
        throw Error(os.str());
    }
    ensure_finite(a, "sequence \"" + label + "\" at n = " + std::to_string(n));
    return a;
}

CMatrix toeplitz(const TrigPoly& f, Index n) {
    if (n < 1) throw Error("toeplitz: dimension must be >= 1");
    CMatrix t = CMatrix::Zero(n, n);
    for (const auto& [k, c] : f.coeffs()) {
        if (k <= -n || k >= n) continue;
        // entries with row - col = k live on Eigen diagonal index -k
        t.diagonal(-k).setConstant(c);
    }
    return t;
}

CMatrix diag_sample(const ScalarFunc& a, Index n) {
    if (n < 1) throw Error("diag_sample: dimension must be >= 1");
    CMatrix d = CMatrix::Zero(n, n);
    for (Index i = 1; i <= n; ++i) d(i - 1, i - 1) = a(static_cast<double>(i) / static_cast<double>(n));
    return d;
}

CMatrix lt_block(const LtDescriptor& d, Index n) {
    if (d.m < 1) throw Error("lt_block: block count m must be >= 1");
    if (n < d.m)
        throw Error("lt_block: dimension " + std::to_string(n) + " is below the block count m = " +
                    std::to_string(d.m) + " (no complete block)");
    const Index   k  = n / d.m;
    const CMatrix tk = toeplitz(d.f, k);
    CMatrix a = CMatrix::Zero(n, n);
    for (Index i = 1; i <= d.m; ++i) {
        const Complex scale = d.a(static_cast<double>(i) / static_cast<double>(d.m));
        a.block((i - 1) * k, (i - 1) * k, k, k) = scale * tk;
    }
    return a;  // trailing n mod m rows/cols stay zero
}

CMatrix glt_build(const std::vector<GltTerm>& terms, Index n) {
    if (terms.empty()) throw Error("glt_build: term list must be nonempty");
    CMatrix acc = CMatrix::Zero(n, n);
    for (const auto& t : terms) acc += diag_sample(t.a, n) * toeplitz(t.f, n);
    return acc;
}

MatrixSeq toeplitz_seq(TrigPoly f, std::string label) {
    if (label.empty()) label = "T(" + f.str() + ")";
    return {std::move(label), [f = std::move(f)](Index n) { return toeplitz(f, n); }};
}

MatrixSeq diag_seq(ScalarFunc a, std::string label) {
    if (label.empty()) label = "D(" + a.text() + ")";
    return {std::move(label), [a = std::move(a)](Index n) { return diag_sample(a, n); }};
}

MatrixSeq lt_seq(LtDescriptor d, std::string label) {
    if (label.empty()) label = "LT(m=" + std::to_string(d.m) + ", a=" + d.a.text() + ", f=" + d.f.str() + ")";
    return {std::move(label), [d = std::move(d)](Index n) { return lt_block(d, n); }};
}

MatrixSeq glt_seq(std::vector<GltTerm> terms, std::string label) {
    if (label.empty()) label = "GLT(" + std::to_string(terms.size()) + " terms)";
    return {std::move(label), [terms = std::move(terms)](Index n) { return glt_build(terms, n); }};
}

MatrixSeq identity_seq() {
    return {"I", [](Index n) { return CMatrix(CMatrix::Identity(n, n)); }};
}

MatrixSeq zero_seq() {
    return {"O", [](Index n) { return CMatrix(CMatrix::Zero(n, n)); }};
}

MatrixSeq leading_ones_seq(Index m) {
    if (m < 1) throw Error("leading_ones_seq: m must be >= 1");
    return {"lead1(m=" + std::to_string(m) + ")", [m](Index n) {
                CMatrix b = CMatrix::Zero(n, n);
                for (Index i = 0; i < n / m; ++i) b(i, i) = Complex(1.0, 0.0);
                return b;
            }};
}

MatrixSeq fixed_matrix_seq(CMatrix a, std::string label) {
    if (a.rows() != a.cols()) throw Error("fixed_matrix_seq: matrix must be square");
    const Index n0 = a.rows();
    return {std::move(label), [a = std::move(a), n0](Index n) {
                if (n != n0)
                    throw Error("fixed matrix sequence is defined only at n = " + std::to_string(n0) +
                                ", requested n = " + std::to_string(n));
                return a;
            }};
}

MatrixSeq seq_add(MatrixSeq x, MatrixSeq y) {
    std::string label = "(" + x.label + " + " + y.label + ")";
    return {std::move(label),
            [x = std::move(x), y = std::move(y)](Index n) { return CMatrix(x.at(n) + y.at(n)); }};
}

MatrixSeq seq_mul(MatrixSeq x, MatrixSeq y) {
    std::string label = "(" + x.label + " * " + y.label + ")";
    return {std::move(label),
            [x = std::move(x), y = std::move(y)](Index n) { return CMatrix(x.at(n) * y.at(n)); }};
}

MatrixSeq seq_adjoint(MatrixSeq x) {
    std::string label = "adj(" + x.label + ")";
    return {std::move(label), [x = std::move(x)](Index n) { return CMatrix(x.at(n).adjoint()); }};
}

MatrixSeq seq_scale(Complex c, MatrixSeq x) {
    std::ostringstream os;
    if (c.imag() == 0.0)
        os << c.real();
    else
        os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
    std::string label = os.str() + " * " + x.label;
    return {std::move(label), [c, x = std::move(x)](Index n) { return CMatrix(c * x.at(n)); }};
}

}  // namespace gltlab
