#include "gltlab/expr.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace gltlab {

namespace {

using AstPtr = std::shared_ptr<const AlgebraAst>;

AstPtr make(AlgebraAst::Kind kind, AstPtr lhs = nullptr, AstPtr rhs = nullptr) {
    auto n  = std::make_shared<AlgebraAst>();
    n->kind = kind;
    n->lhs  = std::move(lhs);
    n->rhs  = std::move(rhs);
    return n;
}

AstPtr make_number(Complex v) {
    auto n   = std::make_shared<AlgebraAst>();
    n->kind  = AlgebraAst::Kind::number;
    n->value = v;
    return n;
}

AstPtr make_scale(Complex v, AstPtr arg) {
    auto n   = std::make_shared<AlgebraAst>();
    n->kind  = AlgebraAst::Kind::scale;
    n->value = v;
    n->lhs   = std::move(arg);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    AstPtr run() {
        AstPtr e = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "cannot parse algebra expression \"" << src_ << "\" at position " << pos_ << ": "
           << msg;
        throw Error(os.str());
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    AstPtr expr() {
        AstPtr lhs = term();
        for (;;) {
            if (consume('+'))
                lhs = make(AlgebraAst::Kind::add, lhs, term());
            else if (consume('-'))
                lhs = make(AlgebraAst::Kind::add, lhs, make_scale(Complex(-1.0, 0.0), term()));
            else
                return lhs;
        }
    }

    AstPtr term() {
        AstPtr lhs = unary();
        for (;;) {
            if (consume('*'))
                lhs = make(AlgebraAst::Kind::mul, lhs, unary());
            else
                return lhs;
        }
    }

    AstPtr unary() {
        if (consume('-')) return make_scale(Complex(-1.0, 0.0), unary());
        return power();
    }

    AstPtr power() {
        AstPtr base = primary();
        if (consume('^')) {
            skip_ws();
            const char* begin = src_.data() + pos_;
            char*       end   = nullptr;
            const long  k     = std::strtol(begin, &end, 10);
            if (end == begin || k < 1) fail("'^' needs a positive integer exponent");
            pos_ += static_cast<std::size_t>(end - begin);
            AstPtr acc = base;
            for (long i = 1; i < k; ++i) acc = make(AlgebraAst::Kind::mul, acc, base);
            return acc;
        }
        return base;
    }

    AstPtr primary() {
        skip_ws();
        if (pos_ >= src_.size()) fail("expected an operand");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = src_.data() + pos_;
            char*       end   = nullptr;
            const double v    = std::strtod(begin, &end);
            if (end == begin) fail("malformed number");
            pos_ += static_cast<std::size_t>(end - begin);
            // a numeric literal directly followed by 'i' is imaginary
            if (pos_ < src_.size() && src_[pos_] == 'i' &&
                (pos_ + 1 == src_.size() ||
                 !std::isalnum(static_cast<unsigned char>(src_[pos_ + 1])))) {
                ++pos_;
                return make_number(Complex(0.0, v));
            }
            return make_number(Complex(v, 0.0));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        if (consume('(')) {
            AstPtr e = expr();
            if (!consume(')')) fail("missing ')'");
            return e;
        }
        fail("expected an operand");
    }

    AstPtr identifier() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string name(src_.substr(start, pos_ - start));
        if (name == "i") return make_number(Complex(0.0, 1.0));
        if (name == "adj") {
            if (!consume('(')) fail("expected '(' after adj");
            AstPtr arg = expr();
            if (!consume(')')) fail("missing ')'");
            return make(AlgebraAst::Kind::adjoint, arg);
        }
        auto n  = std::make_shared<AlgebraAst>();
        n->kind = AlgebraAst::Kind::ident;
        n->name = name;
        return n;
    }

    std::string_view src_;
    std::size_t      pos_ = 0;
};

}  // namespace

std::shared_ptr<const AlgebraAst> parse_algebra(std::string_view text) {
    return Parser(text).run();
}

MatrixSeq bind_sequence_expr(const AlgebraAst& ast,
                             const std::map<std::string, MatrixSeq>& sequences,
                             const std::string& context) {
    switch (ast.kind) {
        case AlgebraAst::Kind::number: return seq_scale(ast.value, identity_seq());
        case AlgebraAst::Kind::ident: {
            auto it = sequences.find(ast.name);
            if (it == sequences.end())
                throw Error(context + ": unknown sequence name '" + ast.name + "'");
            return it->second;
        }
        case AlgebraAst::Kind::add:
            return seq_add(bind_sequence_expr(*ast.lhs, sequences, context),
                           bind_sequence_expr(*ast.rhs, sequences, context));
        case AlgebraAst::Kind::mul:
            return seq_mul(bind_sequence_expr(*ast.lhs, sequences, context),
                           bind_sequence_expr(*ast.rhs, sequences, context));
        case AlgebraAst::Kind::adjoint:
            return seq_adjoint(bind_sequence_expr(*ast.lhs, sequences, context));
        case AlgebraAst::Kind::scale:
            return seq_scale(ast.value, bind_sequence_expr(*ast.lhs, sequences, context));
    }
    throw Error(context + ": unreachable expression node");
}

Word bind_word(const AlgebraAst& ast, const std::map<std::string, std::size_t>& generators,
               const std::string& context) {
    switch (ast.kind) {
        case AlgebraAst::Kind::number: return Word::constant(ast.value);
        case AlgebraAst::Kind::ident: {
            auto it = generators.find(ast.name);
            if (it == generators.end())
                throw Error(context + ": unknown generator name '" + ast.name + "'");
            return Word::generator(it->second, ast.name);
        }
        case AlgebraAst::Kind::add:
            return Word::add(bind_word(*ast.lhs, generators, context),
                             bind_word(*ast.rhs, generators, context));
        case AlgebraAst::Kind::mul:
            return Word::mul(bind_word(*ast.lhs, generators, context),
                             bind_word(*ast.rhs, generators, context));
        case AlgebraAst::Kind::adjoint: return Word::adjoint(bind_word(*ast.lhs, generators, context));
        case AlgebraAst::Kind::scale:
            return Word::scale(ast.value, bind_word(*ast.lhs, generators, context));
    }
    throw Error(context + ": unreachable expression node");
}

}  // namespace gltlab
