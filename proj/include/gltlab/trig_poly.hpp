#pragma once
//
// Project     : gltlab
// Module      : trig_poly
// Description : trigonometric polynomials with finite Fourier support
//

#include "gltlab/types.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <string>

namespace gltlab {

/// f(theta) = sum_k c_k e^{i k theta} with finitely many nonzero c_k.
class TrigPoly {
public:
    TrigPoly() = default;

    static TrigPoly constant(Complex c) {
        TrigPoly f;
        f.set(0, c);
        return f;
    }

    /// c * e^{i k theta}
    static TrigPoly harmonic(int k, Complex c = Complex(1.0, 0.0)) {
        TrigPoly f;
        f.set(k, c);
        return f;
    }

    void set(int k, Complex c) {
        if (c == Complex(0.0, 0.0))
            coeffs_.erase(k);
        else
            coeffs_[k] = c;
    }

    Complex coeff(int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
    }

    const std::map<int, Complex>& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }
    int  min_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    int  max_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    Complex operator()(double theta) const {
        Complex acc(0.0, 0.0);
        for (const auto& [k, c] : coeffs_) acc += c * std::polar(1.0, k * theta);
        return acc;
    }

    /// True when the polynomial is real-valued: c_{-k} = conj(c_k) for all k.
    bool is_real_valued(double tol = 0.0) const {
        for (const auto& [k, c] : coeffs_)
            if (std::abs(c - std::conj(coeff(-k))) > tol) return false;
        return true;
    }

    /// Coefficients of conj(f): c_k -> conj(c_{-k}).
    TrigPoly conjugated() const {
        TrigPoly g;
        for (const auto& [k, c] : coeffs_) g.set(-k, std::conj(c));
        return g;
    }

    friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
        TrigPoly r = a;
        for (const auto& [k, c] : b.coeffs_) r.set(k, r.coeff(k) + c);
        return r;
    }

    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
        TrigPoly r;
        for (const auto& [ka, ca] : a.coeffs_)
            for (const auto& [kb, cb] : b.coeffs_) r.set(ka + kb, r.coeff(ka + kb) + ca * cb);
        return r;
    }

    friend TrigPoly operator*(Complex s, const TrigPoly& a) {
        TrigPoly r;
        for (const auto& [k, c] : a.coeffs_) r.set(k, s * c);
        return r;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : coeffs_) {
            if (!first) os << " + ";
            first = false;
            if (c.imag() == 0.0)
                os << c.real();
            else
                os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
            if (k != 0) os << "*e(" << k << ")";
        }
        return os.str();
    }

private:
    std::map<int, Complex> coeffs_;
};

}  // namespace gltlab
