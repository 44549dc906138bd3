#pragma once
//
// Project     : gltlab
// Module      : types
// Description : shared scalar/matrix aliases and the library error type
//

#include <Eigen/Core>

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace gltlab {

using Complex = std::complex<double>;
using Index   = Eigen::Index;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Throws Error naming `what` if any entry of `a` is NaN or infinite.
void ensure_finite(const CMatrix& a, const std::string& what);

}  // namespace gltlab
