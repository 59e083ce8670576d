#include "chipfire/int_poly.hpp"

#include <sstream>
#include <stdexcept>

#include "chipfire/errors.hpp"

namespace chipfire {

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
    for (long c : coefficients) coeffs_.emplace_back(c);
    normalize();
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = coeffs_.size(); d-- > 0;) {
        const BigInt& c = coeffs_[d];
        if (c == 0) continue;
        const BigInt mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (d == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << '*';
        out << 'x';
        if (d > 1) out << '^' << d;
    }
    return out.str();
}

IntPoly poly_divide_by_x(const IntPoly& p) {
    const auto& c = p.coefficients();
    if (c.empty()) return {};
    if (c.front() != 0)
        throw InputError("cannot divide by x: constant coefficient " + c.front().get_str() + " is nonzero");
    return IntPoly(std::vector<BigInt>(c.begin() + 1, c.end()));
}

IntPoly char_poly(const IntMatrix& a) {
    if (!a.square()) throw InputError("characteristic polynomial of a non-square matrix");
    const std::size_t m = a.rows();

    // Samples f(t) = det(tI - a) for t = 0..m.
    std::vector<BigInt> diff(m + 1);
    for (std::size_t t = 0; t <= m; ++t) {
        IntMatrix shifted(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) shifted(i, j) = -a(i, j);
        for (std::size_t i = 0; i < m; ++i) shifted(i, i) += static_cast<unsigned long>(t);
        diff[t] = determinant(shifted);
    }

    // In place: diff[j] becomes the j-th forward difference at 0.
    for (std::size_t j = 1; j <= m; ++j)
        for (std::size_t t = m; t >= j; --t) diff[t] -= diff[t - 1];

    // f(x) = sum_j (diff[j] / j!) * x(x-1)...(x-j+1); each quotient is an
    // integer because f has integer coefficients.
    std::vector<BigInt> result(m + 1);
    std::vector<BigInt> falling{1};  // x(x-1)...(x-j+1), ascending coefficients
    BigInt factorial = 1;
    for (std::size_t j = 0; j <= m; ++j) {
        if (j > 0) {
            factorial *= static_cast<unsigned long>(j);
            std::vector<BigInt> next(falling.size() + 1);
            const BigInt root = static_cast<unsigned long>(j - 1);
            for (std::size_t i = 0; i < falling.size(); ++i) {
                next[i + 1] += falling[i];
                next[i] -= root * falling[i];
            }
            falling = std::move(next);
        }
        if (!big_divides(factorial, diff[j]))
            throw std::logic_error("char_poly: inexact interpolation step");
        const BigInt coeff = big_divexact(diff[j], factorial);
        for (std::size_t i = 0; i < falling.size(); ++i) result[i] += coeff * falling[i];
    }
    return IntPoly(std::move(result));
}

}  // namespace chipfire
