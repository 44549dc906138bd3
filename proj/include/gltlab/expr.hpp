#pragma once
//
// Project     : gltlab
// Module      : expr
// Description : the small algebra-expression grammar shared by sequence
//               definitions and generator words
//

#include "gltlab/precond.hpp"
#include "gltlab/sequences.hpp"
#include "gltlab/types.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace gltlab {

// Grammar over identifiers:
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' uint)?
//   primary := number | ident | 'i' | 'adj' '(' expr ')' | '(' expr ')'
// Numbers combine with 'i' for complex scalars; adj is the conjugate
// transpose at the matrix level and conjugation at the symbol level.
struct AlgebraAst {
    enum class Kind { number, ident, add, mul, adjoint, scale };

    Kind        kind;
    Complex     value{0.0, 0.0};
    std::string name;
    std::shared_ptr<const AlgebraAst> lhs, rhs;
};

std::shared_ptr<const AlgebraAst> parse_algebra(std::string_view text);

/// Binds identifiers to named sequences; scalars become multiples of {I_n}.
MatrixSeq bind_sequence_expr(const AlgebraAst& ast,
                             const std::map<std::string, MatrixSeq>& sequences,
                             const std::string& context);

/// Binds identifiers to generator slots for the algebra-word harness.
Word bind_word(const AlgebraAst& ast, const std::map<std::string, std::size_t>& generators,
               const std::string& context);

}  // namespace gltlab
