#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "chipfire/bigint.hpp"
#include "chipfire/int_matrix.hpp"

namespace chipfire {

/// Integer polynomial, coefficients in ascending degree. Trailing zeros are
/// stripped on construction, so the zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coefficients);
    IntPoly(std::initializer_list<long> coefficients);

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const BigInt& leading() const { return coeffs_.back(); }

    /// Horner evaluation.
    BigInt eval(const BigInt& x) const;

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// e.g. "x^2 - 2*x", "1", "0".
    std::string to_string() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

inline BigInt poly_eval(const IntPoly& p, const BigInt& x) { return p.eval(x); }

/// p(x) / x. Throws InputError if the constant coefficient is nonzero.
IntPoly poly_divide_by_x(const IntPoly& p);

/// det(xI - a), monic of degree a.rows(). Computed by evaluating the
/// determinant at t = 0..m and interpolating exactly through Newton forward
/// differences. Throws InputError for a non-square matrix.
IntPoly char_poly(const IntMatrix& a);

}  // namespace chipfire
