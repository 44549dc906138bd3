#include "gltlab/scalar_func.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace gltlab {

struct ScalarFunc::Node {
    enum class Op { constant, var, add, sub, mul, div, pow, neg, sqrt_fn, abs_fn, sin_fn, cos_fn, exp_fn };

    Op op;
    Complex value{0.0, 0.0};
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node    = ScalarFunc::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_node(Node::Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->op  = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

NodePtr make_const(Complex v) {
    auto n   = std::make_shared<Node>();
    n->op    = Node::Op::constant;
    n->value = v;
    return n;
}

Complex eval_node(const Node& n, double x) {
    switch (n.op) {
        case Node::Op::constant: return n.value;
        case Node::Op::var: return Complex(x, 0.0);
        case Node::Op::add: return eval_node(*n.lhs, x) + eval_node(*n.rhs, x);
        case Node::Op::sub: return eval_node(*n.lhs, x) - eval_node(*n.rhs, x);
        case Node::Op::mul: return eval_node(*n.lhs, x) * eval_node(*n.rhs, x);
        case Node::Op::div: return eval_node(*n.lhs, x) / eval_node(*n.rhs, x);
        case Node::Op::pow: return std::pow(eval_node(*n.lhs, x), eval_node(*n.rhs, x));
        case Node::Op::neg: return -eval_node(*n.lhs, x);
        case Node::Op::sqrt_fn: return std::sqrt(eval_node(*n.lhs, x));
        case Node::Op::abs_fn: return Complex(std::abs(eval_node(*n.lhs, x)), 0.0);
        case Node::Op::sin_fn: return std::sin(eval_node(*n.lhs, x));
        case Node::Op::cos_fn: return std::cos(eval_node(*n.lhs, x));
        case Node::Op::exp_fn: return std::exp(eval_node(*n.lhs, x));
    }
    return Complex(0.0, 0.0);
}

// recursive-descent parser; grammar:
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | power              (so -x^2 is -(x^2))
//   power   := primary ('^' unary)?           (right associative)
//   primary := number | 'x' | 'i' | 'pi' | fn '(' expr ')' | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr run() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "cannot parse expression \"" << src_ << "\" at position " << pos_ << ": " << msg;
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

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (consume('+'))
                lhs = make_node(Node::Op::add, lhs, term());
            else if (consume('-'))
                lhs = make_node(Node::Op::sub, lhs, term());
            else
                return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        for (;;) {
            if (consume('*'))
                lhs = make_node(Node::Op::mul, lhs, unary());
            else if (consume('/'))
                lhs = make_node(Node::Op::div, lhs, unary());
            else
                return lhs;
        }
    }

    NodePtr unary() {
        if (consume('-')) return make_node(Node::Op::neg, unary());
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (consume('^')) return make_node(Node::Op::pow, base, unary());
        return base;
    }

    NodePtr primary() {
        skip_ws();
        if (pos_ >= src_.size()) fail("expected an operand");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        if (consume('(')) {
            NodePtr e = expr();
            if (!consume(')')) fail("missing ')'");
            return e;
        }
        fail("expected an operand");
    }

    NodePtr number() {
        const char* begin = src_.data() + pos_;
        char*       end   = nullptr;
        const double v    = std::strtod(begin, &end);
        if (end == begin) fail("malformed number");
        pos_ += static_cast<std::size_t>(end - begin);
        return make_const(Complex(v, 0.0));
    }

    NodePtr identifier() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string name(src_.substr(start, pos_ - start));
        if (name == "x") return make_node(Node::Op::var);
        if (name == "i") return make_const(Complex(0.0, 1.0));
        if (name == "pi") return make_const(Complex(3.14159265358979323846, 0.0));

        Node::Op op;
        if (name == "sqrt")
            op = Node::Op::sqrt_fn;
        else if (name == "abs")
            op = Node::Op::abs_fn;
        else if (name == "sin")
            op = Node::Op::sin_fn;
        else if (name == "cos")
            op = Node::Op::cos_fn;
        else if (name == "exp")
            op = Node::Op::exp_fn;
        else
            fail("unknown identifier '" + name + "'");

        if (!consume('(')) fail("expected '(' after '" + name + "'");
        NodePtr arg = expr();
        if (!consume(')')) fail("missing ')'");
        return make_node(op, arg);
    }

    std::string_view src_;
    std::size_t      pos_ = 0;
};

}  // namespace

ScalarFunc::ScalarFunc() : root_(make_const(Complex(0.0, 0.0))), text_("0") {}

ScalarFunc::ScalarFunc(std::shared_ptr<const Node> root, std::string text)
    : root_(std::move(root)), text_(std::move(text)) {}

ScalarFunc ScalarFunc::parse(std::string_view text) {
    return ScalarFunc(Parser(text).run(), std::string(text));
}

ScalarFunc ScalarFunc::constant(Complex value) {
    std::ostringstream os;
    if (value.imag() == 0.0)
        os << value.real();
    else
        os << "(" << value.real() << (value.imag() < 0 ? "" : "+") << value.imag() << "*i)";
    return ScalarFunc(make_const(value), os.str());
}

ScalarFunc ScalarFunc::identity() { return ScalarFunc(make_node(Node::Op::var), "x"); }

Complex ScalarFunc::operator()(double x) const {
    const Complex v = eval_node(*root_, x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::ostringstream os;
        os << "scalar function \"" << text_ << "\" is non-finite at x = " << x;
        throw Error(os.str());
    }
    return v;
}

}  // namespace gltlab
