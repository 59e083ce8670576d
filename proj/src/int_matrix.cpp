#include "chipfire/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "chipfire/errors.hpp"

namespace chipfire {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw InputError("ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) {
        const BigInt& s = (*this)(src, c);
        if (s != 0) (*this)(dst, c) += factor * s;
    }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) {
        const BigInt& s = (*this)(r, src);
        if (s != 0) (*this)(r, dst) += factor * s;
    }
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::without_row_col(std::size_t r, std::size_t c) const {
    IntMatrix out(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
            if (j == c) continue;
            out(oi, oj++) = (*this)(i, j);
        }
        ++oi;
    }
    return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
    if (other.rows_ != rows_) throw InputError("hconcat: row counts differ");
    IntMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
    }
    return out;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const {
    std::vector<BigInt> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

std::vector<BigInt> IntMatrix::operator*(const std::vector<BigInt>& x) const {
    if (x.size() != cols_) throw InputError("matrix-vector size mismatch");
    std::vector<BigInt> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * x[c];
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product size mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        out << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c).get_str();
        out << ']';
    }
    out << ']';
    return out.str();
}

BigInt determinant(const IntMatrix& a) {
    if (!a.square()) throw InputError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;

    IntMatrix m = a;
    BigInt previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Sylvester's identity makes this division exact.
                m(i, j) = big_divexact(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
            }
            m(i, k) = 0;
        }
        previous = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

}  // namespace chipfire
