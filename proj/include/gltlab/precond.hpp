#pragma once
//
// Project     : gltlab
// Module      : precond
// Description : unitary-algebra projections, circulant and block-Fourier
//               preconditioners, and the finite-generator cluster harness
//

#include "gltlab/clustering.hpp"
#include "gltlab/sequences.hpp"
#include "gltlab/symbol.hpp"
#include "gltlab/types.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gltlab {

/// Fourier matrix (1/sqrt(n)) e^{2 pi i j l / n}, j,l = 0..n-1. Cached per n;
/// the returned reference stays valid for the process lifetime.
const CMatrix& fourier(Index n);

// Block diagonal of m copies of F_{floor(n/m)} followed by F_{n mod m}
// (trailing block omitted when n mod m = 0). Unitary; requires n >= m >= 1.
CMatrix block_fourier(Index n, Index m);

/// |U*U - I|_F <= tol_scale * sqrt(n).
bool is_unitary(const CMatrix& u, double tol_scale = 1e-10);

// U diag(U* A U) U*: the Frobenius-orthogonal projection of A onto the
// algebra of matrices diagonalized by U. Rejects non-unitary U.
CMatrix project_unitary(const CMatrix& a, const CMatrix& u);

// The Frobenius-optimal circulant of A by wrapped-diagonal averaging:
// first-column entries c_k = (1/n) * (sum of the k-th wrapped diagonal).
// Coincides with project_unitary(A, fourier(n)) up to roundoff.
CMatrix circulant_project(const CMatrix& a);

struct UnitaryFamily {
    std::string label;
    std::function<CMatrix(Index)> generate;

    static UnitaryFamily fourier_family();
    static UnitaryFamily block_fourier_family(Index m);
    static UnitaryFamily explicit_family(std::string label, std::function<CMatrix(Index)> generate);
};

// Builds A = lt_block(d, n) and U = block_fourier(n, d.m); returns the
// projection P_U(A) and the delta P_U(A) - A.
std::pair<CMatrix, CMatrix> lt_precondition(const LtDescriptor& d, Index n);

/// floor(sqrt(n)); block-count schedule keeping n >= m^2.
Index sqrt_block_schedule(Index n);

// The preconditioner and delta sequences for the locally-block construction
// with a per-n block-count schedule m(n).
struct LtPrecondSeqs {
    MatrixSeq preconditioner;
    MatrixSeq delta;
};
LtPrecondSeqs lt_precondition_seq(ScalarFunc a, TrigPoly f,
                                  std::function<Index(Index)> block_schedule,
                                  std::string label = "");

// A finite word over named generators under +, *, adjoint and scalar
// multiples. Evaluates on the generator matrices at a fixed dimension
// (constants become multiples of the identity) and on the generator symbols.
class Word {
public:
    struct Node;

    static Word generator(std::size_t index, std::string name);
    static Word constant(Complex c);
    static Word add(Word lhs, Word rhs);
    static Word mul(Word lhs, Word rhs);
    static Word adjoint(Word arg);
    static Word scale(Complex c, Word arg);

    CMatrix    eval(std::span<const CMatrix> generators, Index n) const;
    SymbolExpr symbol(std::span<const SymbolExpr> generators) const;
    const std::string& text() const { return text_; }
    std::size_t max_generator_index() const;

private:
    explicit Word(std::shared_ptr<const Node> root, std::string text);

    std::shared_ptr<const Node> root_;
    std::string text_;
};

struct Generator {
    std::string name;
    SymbolExpr  symbol;
    MatrixSeq   seq;
};

struct KorovkinOptions {
    std::vector<Index>  dims;
    std::vector<double> eps_grid;
    // Spectral-norm bound each generator must respect on the dims grid;
    // default is 2x the max norm over the two smallest dims.
    std::optional<double> norm_bound;
    // Include sum_i g_i adj(g_i) in the hypothesis set.
    bool include_generator_gram = true;
};

struct KorovkinEntry {
    std::string       name;
    ClusterReport     report;  // counts of P_U(A) - A; frob2 is |P_U(A)-A|_F^2 per n
    ClusterLabel      label = ClusterLabel::inconclusive;  // aggregate over eps
    FrobeniusEvidence frobenius = FrobeniusEvidence::none;
};

struct PrecondReport {
    std::string         family;
    std::vector<Index>  dims;
    std::vector<double> eps_grid;
    double              norm_bound = 0.0;
    std::vector<double> generator_norms;  // max spectral norm over dims, per generator
    std::vector<KorovkinEntry> hypotheses;
    std::vector<KorovkinEntry> elements;
    bool hypotheses_pass = false;  // every hypothesis label weak or stronger
};

// Stage 1 runs the cluster diagnostics of P_U(A_n(g)) - A_n(g) for every
// hypothesis g (the generators plus, by default, their gram sum); stage 2
// repeats them for the requested algebra words. Generators whose spectral
// norm exceeds the declared bound anywhere on the dims grid make the run
// refuse with an error.
PrecondReport korovkin_run(std::span<const Generator> generators,
                           std::span<const std::pair<std::string, Word>> elements,
                           const UnitaryFamily& family, const KorovkinOptions& options);

}  // namespace gltlab
