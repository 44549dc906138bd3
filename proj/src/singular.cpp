#include "gltlab/singular.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace gltlab {

namespace {

void clamp_dust(RVector& sigma) {
    if (sigma.size() == 0) return;
    const double floor = 1e-12 * sigma(0);
    for (Index i = 0; i < sigma.size(); ++i)
        if (sigma(i) < floor) sigma(i) = 0.0;
}

}  // namespace

double SingularProfile::value(Index i) const {
    if (i < 1 || i > n + 1) throw Error("SingularProfile::value: index out of range");
    return i == n + 1 ? 0.0 : sigma(i - 1);
}

SingularProfile svd_profile(const CMatrix& a) {
    if (a.rows() != a.cols()) throw Error("svd_profile: matrix must be square");
    ensure_finite(a, "svd_profile");
    Eigen::BDCSVD<CMatrix> svd(a);
    if (svd.info() != Eigen::Success) throw Error("svd_profile: singular value decomposition did not converge");
    SingularProfile prof;
    prof.n     = a.rows();
    prof.sigma = svd.singularValues();
    clamp_dust(prof.sigma);
    return prof;
}

SvdFactors svd_factors(const CMatrix& a) {
    if (a.rows() != a.cols()) throw Error("svd_factors: matrix must be square");
    ensure_finite(a, "svd_factors");
    Eigen::BDCSVD<CMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) throw Error("svd_factors: singular value decomposition did not converge");
    SvdFactors f{svd.matrixU(), svd.singularValues(), svd.matrixV()};
    const double residual = (f.u * f.sigma.asDiagonal() * f.v.adjoint() - a).norm();
    if (residual > 1e-10 * a.norm() + 1e-300)
        throw Error("svd_factors: reconstruction residual " + std::to_string(residual) +
                    " exceeds 1e-10 * |a|_F");
    return f;
}

double spectral_norm(const CMatrix& a) {
    const SingularProfile prof = svd_profile(a);
    return prof.n == 0 ? 0.0 : prof.sigma(0);
}

double schatten(const SingularProfile& prof, double p) {
    if (!(p >= 1.0) || p == kInf) throw Error("schatten: p must be finite and >= 1");
    double acc = 0.0;
    for (Index i = 0; i < prof.sigma.size(); ++i) acc += std::pow(prof.sigma(i), p);
    return std::pow(acc, 1.0 / p);
}

Index count_at_least(const SingularProfile& prof, double alpha) {
    const double* begin = prof.sigma.data();
    const double* end   = begin + prof.sigma.size();
    // sigma is sorted non-increasing; entries >= alpha form a prefix
    auto it = std::partition_point(begin, end, [alpha](double s) { return s >= alpha; });
    return static_cast<Index>(it - begin);
}

std::vector<std::pair<double, double>> alpha_profile(const SingularProfile& prof,
                                                     std::span<const double> alphas) {
    if (!std::is_sorted(alphas.begin(), alphas.end()))
        throw Error("alpha_profile: alphas must be sorted increasing");
    std::vector<std::pair<double, double>> out;
    out.reserve(alphas.size());
    for (double alpha : alphas)
        out.emplace_back(alpha, static_cast<double>(count_at_least(prof, alpha)) /
                                    static_cast<double>(prof.n));
    return out;
}

}  // namespace gltlab
