#pragma once
//
// Project     : gltlab
// Module      : symbol
// Description : separable-atom symbol trees on [0,1] x [-pi,pi] and their
//               L^p norms by midpoint quadrature
//

#include "gltlab/scalar_func.hpp"
#include "gltlab/trig_poly.hpp"
#include "gltlab/types.hpp"

#include <memory>

namespace gltlab {

// kappa(x, theta) built from atoms a(x) * f(theta) under add, mul, conj and
// scalar multiples. Immutable; copies share the tree.
class SymbolExpr {
public:
    struct Node {
        enum class Kind { atom, add, mul, conj, scale };

        Kind       kind;
        ScalarFunc a;      // atom
        TrigPoly   f;      // atom
        Complex    factor{0.0, 0.0};  // scale
        std::shared_ptr<const Node> lhs, rhs;
    };

    static SymbolExpr atom(ScalarFunc a, TrigPoly f);
    static SymbolExpr add(SymbolExpr lhs, SymbolExpr rhs);
    static SymbolExpr mul(SymbolExpr lhs, SymbolExpr rhs);
    static SymbolExpr conj(SymbolExpr arg);
    static SymbolExpr scale(Complex factor, SymbolExpr arg);

    /// Constant c as the atom (a = c) * (f = 1).
    static SymbolExpr constant(Complex c);

    Complex eval(double x, double theta) const;

    std::shared_ptr<const Node> root() const { return root_; }

private:
    explicit SymbolExpr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

    std::shared_ptr<const Node> root_;
};

inline Complex eval_symbol(const SymbolExpr& s, double x, double theta) { return s.eval(x, theta); }

/// |s| sampled on the grid x axis by theta axis of midpoint nodes
/// (x_i = (i+1/2)/g, theta_j = -pi + (j+1/2) * 2pi/g).
RMatrix sample_abs_grid(const SymbolExpr& s, int grid);

// Unnormalized L^p(D) norm, D = [0,1] x [-pi,pi]:
//   finite p  : (integral of |s|^p over D)^{1/p}, midpoint rule on grid^2 nodes
//   p = inf   : max of |s| over the grid (a lower bound of the essential sup)
// Requires p >= 1 and grid >= 64.
double lp_norm(const SymbolExpr& s, double p, int grid = 512);

/// (2pi)^{1/p} for finite p, 1 for p = inf.
double phi_p_factor(double p);

}  // namespace gltlab
