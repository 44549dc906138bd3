#pragma once
//
// Project     : gltlab
// Module      : sequences
// Description : structured matrix constructors (Toeplitz, sampled diagonal,
//               locally-block) and the matrix-sequence abstraction
//

#include "gltlab/scalar_func.hpp"
#include "gltlab/trig_poly.hpp"
#include "gltlab/types.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gltlab {

// A lazy rule n -> dense n x n matrix. Builders are pure: calls with the same
// n must produce identical matrices, and evaluations at distinct n may run
// concurrently.
struct MatrixSeq {
    std::string label;
    std::function<CMatrix(Index)> build;

    /// Evaluates at dimension n (>= 1) and checks squareness and finiteness.
    CMatrix at(Index n) const;
};

/// T_n(f): entry (j,k) equals the Fourier coefficient of f at j-k.
CMatrix toeplitz(const TrigPoly& f, Index n);

/// D_n(a) = diag a(i/n), i = 1..n. Never samples a at 0.
CMatrix diag_sample(const ScalarFunc& a, Index n);

struct LtDescriptor {
    ScalarFunc a;
    TrigPoly   f;
    Index      m = 1;  // block count, >= 1
};

// Block diagonal of a(i/m) * T_{floor(n/m)}(f) for i = 1..m followed by a
// zero block of size n mod m. Requires n >= m.
CMatrix lt_block(const LtDescriptor& d, Index n);

struct GltTerm {
    ScalarFunc a;
    TrigPoly   f;
};

/// sum_i D_n(a_i) * T_n(f_i) over a nonempty term list.
CMatrix glt_build(const std::vector<GltTerm>& terms, Index n);

// sequence factories
MatrixSeq toeplitz_seq(TrigPoly f, std::string label = "");
MatrixSeq diag_seq(ScalarFunc a, std::string label = "");
MatrixSeq lt_seq(LtDescriptor d, std::string label = "");
MatrixSeq glt_seq(std::vector<GltTerm> terms, std::string label = "");
MatrixSeq identity_seq();
MatrixSeq zero_seq();
/// Diagonal 0/1 matrix with the first floor(n/m) diagonal entries equal to 1.
MatrixSeq leading_ones_seq(Index m);
/// A sequence defined only at the dimension of the given matrix.
MatrixSeq fixed_matrix_seq(CMatrix a, std::string label);

// pointwise-in-n sequence algebra
MatrixSeq seq_add(MatrixSeq x, MatrixSeq y);
MatrixSeq seq_mul(MatrixSeq x, MatrixSeq y);
MatrixSeq seq_adjoint(MatrixSeq x);
MatrixSeq seq_scale(Complex c, MatrixSeq x);

}  // namespace gltlab
