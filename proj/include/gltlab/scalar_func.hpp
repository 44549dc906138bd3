#pragma once
//
// Project     : gltlab
// Module      : scalar_func
// Description : expression trees over the unit-interval variable x
//

#include "gltlab/types.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace gltlab {

// A complex-valued function of x built from constants, x, i, pi and the
// operators + - * / ^ with sqrt, abs, sin, cos, exp. Immutable; copies share
// the tree. Evaluation rejects non-finite results, naming the sample point,
// so functions singular inside (0,1] surface errors at the offending x.
class ScalarFunc {
public:
    ScalarFunc();  // the constant 0

    static ScalarFunc parse(std::string_view text);
    static ScalarFunc constant(Complex value);
    static ScalarFunc identity();  // x

    Complex operator()(double x) const;

    const std::string& text() const { return text_; }

    struct Node;

private:
    explicit ScalarFunc(std::shared_ptr<const Node> root, std::string text);

    std::shared_ptr<const Node> root_;
    std::string text_;
};

}  // namespace gltlab
