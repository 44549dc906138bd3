#include "gltlab/symbol.hpp"

#include <cmath>
#include <utility>

namespace gltlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Node    = SymbolExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

Complex eval_node(const Node& n, double x, double theta) {
    switch (n.kind) {
        case Node::Kind::atom: return n.a(x) * n.f(theta);
        case Node::Kind::add: return eval_node(*n.lhs, x, theta) + eval_node(*n.rhs, x, theta);
        case Node::Kind::mul: return eval_node(*n.lhs, x, theta) * eval_node(*n.rhs, x, theta);
        case Node::Kind::conj: return std::conj(eval_node(*n.lhs, x, theta));
        case Node::Kind::scale: return n.factor * eval_node(*n.lhs, x, theta);
    }
    return Complex(0.0, 0.0);
}

}  // namespace

SymbolExpr SymbolExpr::atom(ScalarFunc a, TrigPoly f) {
    auto n  = std::make_shared<Node>();
    n->kind = Node::Kind::atom;
    n->a    = std::move(a);
    n->f    = std::move(f);
    return SymbolExpr(n);
}

SymbolExpr SymbolExpr::add(SymbolExpr lhs, SymbolExpr rhs) {
    auto n  = std::make_shared<Node>();
    n->kind = Node::Kind::add;
    n->lhs  = lhs.root_;
    n->rhs  = rhs.root_;
    return SymbolExpr(n);
}

SymbolExpr SymbolExpr::mul(SymbolExpr lhs, SymbolExpr rhs) {
    auto n  = std::make_shared<Node>();
    n->kind = Node::Kind::mul;
    n->lhs  = lhs.root_;
    n->rhs  = rhs.root_;
    return SymbolExpr(n);
}

SymbolExpr SymbolExpr::conj(SymbolExpr arg) {
    auto n  = std::make_shared<Node>();
    n->kind = Node::Kind::conj;
    n->lhs  = arg.root_;
    return SymbolExpr(n);
}

SymbolExpr SymbolExpr::scale(Complex factor, SymbolExpr arg) {
    auto n    = std::make_shared<Node>();
    n->kind   = Node::Kind::scale;
    n->factor = factor;
    n->lhs    = arg.root_;
    return SymbolExpr(n);
}

SymbolExpr SymbolExpr::constant(Complex c) {
    return atom(ScalarFunc::constant(c), TrigPoly::constant(Complex(1.0, 0.0)));
}

Complex SymbolExpr::eval(double x, double theta) const { return eval_node(*root_, x, theta); }

RMatrix sample_abs_grid(const SymbolExpr& s, int grid) {
    if (grid < 1) throw Error("sample_abs_grid: grid must be positive");
    RMatrix out(grid, grid);
    const double dx = 1.0 / grid;
    const double dt = 2.0 * kPi / grid;
    for (int i = 0; i < grid; ++i) {
        const double x = (i + 0.5) * dx;
        for (int j = 0; j < grid; ++j) {
            const double theta = -kPi + (j + 0.5) * dt;
            out(i, j)          = std::abs(s.eval(x, theta));
        }
    }
    if (!out.allFinite()) throw Error("sample_abs_grid: symbol evaluated to a non-finite value");
    return out;
}

double lp_norm(const SymbolExpr& s, double p, int grid) {
    if (!(p >= 1.0)) throw Error("lp_norm: p must be >= 1");
    if (grid < 64) throw Error("lp_norm: grid must be >= 64 points per axis");

    const RMatrix a = sample_abs_grid(s, grid);
    if (p == kInf) return a.maxCoeff();

    const double cell = (1.0 / grid) * (2.0 * kPi / grid);
    double       acc  = 0.0;
    if (p == 1.0)
        acc = a.sum();
    else if (p == 2.0)
        acc = a.squaredNorm();
    else
        acc = a.unaryExpr([p](double v) { return std::pow(v, p); }).sum();
    return std::pow(acc * cell, 1.0 / p);
}

double phi_p_factor(double p) {
    if (!(p >= 1.0)) throw Error("phi_p_factor: p must be >= 1");
    if (p == kInf) return 1.0;
    return std::pow(2.0 * kPi, 1.0 / p);
}

}  // namespace gltlab
