#include "gltlab/precond.hpp"

#include "gltlab/parallel.hpp"
#include "gltlab/singular.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace gltlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

const CMatrix& fourier(Index n) {
    if (n < 1) throw Error("fourier: dimension must be >= 1");
    static std::mutex                                  mutex;
    static std::map<Index, std::unique_ptr<CMatrix>>   cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto f = std::make_unique<CMatrix>(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (Index j = 0; j < n; ++j)
        for (Index l = 0; l < n; ++l)
            (*f)(j, l) = scale * std::polar(1.0, 2.0 * kPi * static_cast<double>(j) *
                                                     static_cast<double>(l) / static_cast<double>(n));
    return *cache.emplace(n, std::move(f)).first->second;
}

CMatrix block_fourier(Index n, Index m) {
    if (m < 1 || n < m) throw Error("block_fourier: requires n >= m >= 1");
    const Index k    = n / m;
    const Index tail = n % m;
    CMatrix u = CMatrix::Zero(n, n);
    const CMatrix& fk = fourier(k);
    for (Index i = 0; i < m; ++i) u.block(i * k, i * k, k, k) = fk;
    if (tail > 0) u.block(m * k, m * k, tail, tail) = fourier(tail);
    return u;
}

bool is_unitary(const CMatrix& u, double tol_scale) {
    if (u.rows() != u.cols()) return false;
    const Index n = u.rows();
    const double err = (u.adjoint() * u - CMatrix::Identity(n, n)).norm();
    return err <= tol_scale * std::sqrt(static_cast<double>(n));
}

CMatrix project_unitary(const CMatrix& a, const CMatrix& u) {
    if (a.rows() != a.cols() || u.rows() != u.cols() || a.rows() != u.rows())
        throw Error("project_unitary: dimension mismatch");
    if (!is_unitary(u)) throw Error("project_unitary: matrix U fails the unitarity tolerance");
    const CVector d = (u.adjoint() * a * u).diagonal();
    return u * d.asDiagonal() * u.adjoint();
}

CMatrix circulant_project(const CMatrix& a) {
    if (a.rows() != a.cols()) throw Error("circulant_project: matrix must be square");
    const Index n = a.rows();
    CVector c = CVector::Zero(n);
    for (Index j = 0; j < n; ++j)
        for (Index l = 0; l < n; ++l) c((j - l + n) % n) += a(j, l);
    c /= static_cast<double>(n);
    CMatrix out(n, n);
    for (Index j = 0; j < n; ++j)
        for (Index l = 0; l < n; ++l) out(j, l) = c((j - l + n) % n);
    return out;
}

UnitaryFamily UnitaryFamily::fourier_family() {
    return {"fourier", [](Index n) { return fourier(n); }};
}

UnitaryFamily UnitaryFamily::block_fourier_family(Index m) {
    return {"block_fourier(m=" + std::to_string(m) + ")",
            [m](Index n) { return block_fourier(n, m); }};
}

UnitaryFamily UnitaryFamily::explicit_family(std::string label,
                                             std::function<CMatrix(Index)> generate) {
    return {std::move(label), std::move(generate)};
}

std::pair<CMatrix, CMatrix> lt_precondition(const LtDescriptor& d, Index n) {
    const CMatrix a = lt_block(d, n);
    const CMatrix u = block_fourier(n, d.m);
    CMatrix p = project_unitary(a, u);
    CMatrix delta = p - a;
    return {std::move(p), std::move(delta)};
}

Index sqrt_block_schedule(Index n) {
    Index m = static_cast<Index>(std::floor(std::sqrt(static_cast<double>(n))));
    while (m * m > n) --m;
    while ((m + 1) * (m + 1) <= n) ++m;
    return std::max<Index>(1, m);
}

LtPrecondSeqs lt_precondition_seq(ScalarFunc a, TrigPoly f,
                                  std::function<Index(Index)> block_schedule, std::string label) {
    if (label.empty()) label = "ltprecond(a=" + a.text() + ", f=" + f.str() + ")";
    auto make = [a = std::move(a), f = std::move(f),
                 schedule = std::move(block_schedule)](Index n, bool want_delta) {
        const LtDescriptor d{a, f, schedule(n)};
        auto [p, delta] = lt_precondition(d, n);
        return want_delta ? delta : p;
    };
    MatrixSeq pre{label, [make](Index n) { return make(n, false); }};
    MatrixSeq del{"delta " + label, [make](Index n) { return make(n, true); }};
    return {std::move(pre), std::move(del)};
}

// ---------------------------------------------------------------------------
// algebra words
// ---------------------------------------------------------------------------

struct Word::Node {
    enum class Kind { generator, constant, add, mul, adjoint, scale };

    Kind        kind;
    std::size_t index = 0;     // generator
    Complex     value{0, 0};   // constant / scale factor
    std::shared_ptr<const Node> lhs, rhs;
};

Word::Word(std::shared_ptr<const Node> root, std::string text)
    : root_(std::move(root)), text_(std::move(text)) {}

Word Word::generator(std::size_t index, std::string name) {
    auto n   = std::make_shared<Node>();
    n->kind  = Node::Kind::generator;
    n->index = index;
    return Word(n, std::move(name));
}

Word Word::constant(Complex c) {
    auto n   = std::make_shared<Node>();
    n->kind  = Node::Kind::constant;
    n->value = c;
    std::ostringstream os;
    if (c.imag() == 0.0)
        os << c.real();
    else
        os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
    return Word(n, os.str());
}

Word Word::add(Word lhs, Word rhs) {
    auto n  = std::make_shared<Node>();
    n->kind = Node::Kind::add;
    n->lhs  = lhs.root_;
    n->rhs  = rhs.root_;
    return Word(n, "(" + lhs.text_ + " + " + rhs.text_ + ")");
}

Word Word::mul(Word lhs, Word rhs) {
    auto n  = std::make_shared<Node>();
    n->kind = Node::Kind::mul;
    n->lhs  = lhs.root_;
    n->rhs  = rhs.root_;
    return Word(n, "(" + lhs.text_ + " * " + rhs.text_ + ")");
}

Word Word::adjoint(Word arg) {
    auto n  = std::make_shared<Node>();
    n->kind = Node::Kind::adjoint;
    n->lhs  = arg.root_;
    return Word(n, "adj(" + arg.text_ + ")");
}

Word Word::scale(Complex c, Word arg) {
    auto n   = std::make_shared<Node>();
    n->kind  = Node::Kind::scale;
    n->value = c;
    n->lhs   = arg.root_;
    return Word(n, Word::constant(c).text_ + " * " + arg.text_);
}

namespace {

CMatrix eval_word(const Word::Node& n, std::span<const CMatrix> gens, Index dim);
SymbolExpr word_symbol(const Word::Node& n, std::span<const SymbolExpr> gens);
std::size_t word_max_index(const Word::Node& n);

CMatrix eval_word(const Word::Node& n, std::span<const CMatrix> gens, Index dim) {
    using Kind = Word::Node::Kind;
    switch (n.kind) {
        case Kind::generator:
            if (n.index >= gens.size()) throw Error("word references an undefined generator");
            return gens[n.index];
        case Kind::constant: return CMatrix(n.value * CMatrix::Identity(dim, dim));
        case Kind::add: return CMatrix(eval_word(*n.lhs, gens, dim) + eval_word(*n.rhs, gens, dim));
        case Kind::mul: return CMatrix(eval_word(*n.lhs, gens, dim) * eval_word(*n.rhs, gens, dim));
        case Kind::adjoint: return CMatrix(eval_word(*n.lhs, gens, dim).adjoint());
        case Kind::scale: return CMatrix(n.value * eval_word(*n.lhs, gens, dim));
    }
    throw Error("word: unreachable node kind");
}

SymbolExpr word_symbol(const Word::Node& n, std::span<const SymbolExpr> gens) {
    using Kind = Word::Node::Kind;
    switch (n.kind) {
        case Kind::generator:
            if (n.index >= gens.size()) throw Error("word references an undefined generator");
            return gens[n.index];
        case Kind::constant: return SymbolExpr::constant(n.value);
        case Kind::add: return SymbolExpr::add(word_symbol(*n.lhs, gens), word_symbol(*n.rhs, gens));
        case Kind::mul: return SymbolExpr::mul(word_symbol(*n.lhs, gens), word_symbol(*n.rhs, gens));
        case Kind::adjoint: return SymbolExpr::conj(word_symbol(*n.lhs, gens));
        case Kind::scale: return SymbolExpr::scale(n.value, word_symbol(*n.lhs, gens));
    }
    throw Error("word: unreachable node kind");
}

std::size_t word_max_index(const Word::Node& n) {
    using Kind = Word::Node::Kind;
    switch (n.kind) {
        case Kind::generator: return n.index;
        case Kind::constant: return 0;
        case Kind::add:
        case Kind::mul: return std::max(word_max_index(*n.lhs), word_max_index(*n.rhs));
        case Kind::adjoint:
        case Kind::scale: return word_max_index(*n.lhs);
    }
    return 0;
}

}  // namespace

CMatrix Word::eval(std::span<const CMatrix> generators, Index n) const {
    return eval_word(*root_, generators, n);
}

SymbolExpr Word::symbol(std::span<const SymbolExpr> generators) const {
    return word_symbol(*root_, generators);
}

std::size_t Word::max_generator_index() const { return word_max_index(*root_); }

// ---------------------------------------------------------------------------
// the finite-generator harness
// ---------------------------------------------------------------------------

namespace {

KorovkinEntry run_entry(const std::string& name, const MatrixSeq& seq, const UnitaryFamily& family,
                        std::span<const Index> dims, std::span<const double> eps_grid) {
    MatrixSeq delta{"P(" + name + ") - " + name, [&seq, &family](Index n) {
                        const CMatrix a = seq.at(n);
                        const CMatrix u = family.generate(n);
                        return CMatrix(project_unitary(a, u) - a);
                    }};
    KorovkinEntry entry;
    entry.name   = name;
    entry.report = outlier_counts(delta, dims, eps_grid);
    classify(entry.report);
    entry.label     = aggregate_label(entry.report.classification);
    entry.frobenius = frobenius_criterion(entry.report);
    return entry;
}

}  // namespace

PrecondReport korovkin_run(std::span<const Generator> generators,
                           std::span<const std::pair<std::string, Word>> elements,
                           const UnitaryFamily& family, const KorovkinOptions& options) {
    if (generators.empty()) throw Error("korovkin_run: generator set must be nonempty");
    if (options.dims.size() < 4) throw Error("korovkin_run: needs at least 4 dims");
    for (const auto& [name, word] : elements)
        if (word.max_generator_index() >= generators.size())
            throw Error("korovkin_run: element \"" + name + "\" references an undefined generator");

    PrecondReport report;
    report.family   = family.label;
    report.dims     = options.dims;
    report.eps_grid.assign(options.eps_grid.begin(), options.eps_grid.end());

    // norm-boundedness gate: every generator sequence must stay below the
    // declared spectral-norm bound on the whole dims grid
    const std::size_t gcount = generators.size();
    std::vector<std::vector<double>> norms(gcount, std::vector<double>(options.dims.size(), 0.0));
    parallel_for(gcount * options.dims.size(), [&](std::size_t idx) {
        const std::size_t g = idx / options.dims.size();
        const std::size_t i = idx % options.dims.size();
        norms[g][i]         = spectral_norm(generators[g].seq.at(options.dims[i]));
    });
    report.generator_norms.resize(gcount);
    for (std::size_t g = 0; g < gcount; ++g)
        report.generator_norms[g] = *std::max_element(norms[g].begin(), norms[g].end());

    if (options.norm_bound) {
        report.norm_bound = *options.norm_bound;
    } else {
        double small = 0.0;
        for (std::size_t g = 0; g < gcount; ++g)
            for (std::size_t i = 0; i < std::min<std::size_t>(2, options.dims.size()); ++i)
                small = std::max(small, norms[g][i]);
        report.norm_bound = 2.0 * small;
    }
    for (std::size_t g = 0; g < gcount; ++g) {
        if (report.generator_norms[g] > report.norm_bound + 1e-9) {
            std::ostringstream os;
            os << "korovkin_run refused: generator \"" << generators[g].name
               << "\" is not norm bounded on the dims grid (max spectral norm "
               << report.generator_norms[g] << " exceeds the declared bound "
               << report.norm_bound << ")";
            throw Error(os.str());
        }
    }

    // stage 1: the hypothesis set
    for (const auto& g : generators)
        report.hypotheses.push_back(run_entry(g.name, g.seq, family, options.dims, options.eps_grid));
    if (options.include_generator_gram) {
        MatrixSeq gram = seq_mul(generators[0].seq, seq_adjoint(generators[0].seq));
        std::string name = generators[0].name + "*adj(" + generators[0].name + ")";
        for (std::size_t g = 1; g < gcount; ++g) {
            gram = seq_add(gram, seq_mul(generators[g].seq, seq_adjoint(generators[g].seq)));
            name += " + " + generators[g].name + "*adj(" + generators[g].name + ")";
        }
        gram.label = name;
        report.hypotheses.push_back(run_entry(name, gram, family, options.dims, options.eps_grid));
    }
    report.hypotheses_pass = true;
    for (const auto& h : report.hypotheses)
        if (h.label != ClusterLabel::weak && h.label != ClusterLabel::strong)
            report.hypotheses_pass = false;

    // stage 2: requested algebra elements
    std::vector<MatrixSeq> gen_seqs;
    gen_seqs.reserve(gcount);
    for (const auto& g : generators) gen_seqs.push_back(g.seq);
    for (const auto& [name, word] : elements) {
        MatrixSeq seq{name, [word, gen_seqs](Index n) {
                          std::vector<CMatrix> at_n;
                          at_n.reserve(gen_seqs.size());
                          for (const auto& g : gen_seqs) at_n.push_back(g.at(n));
                          return word.eval(at_n, n);
                      }};
        report.elements.push_back(run_entry(name, seq, family, options.dims, options.eps_grid));
    }
    return report;
}

}  // namespace gltlab
