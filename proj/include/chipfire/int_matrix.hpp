#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "chipfire/bigint.hpp"

namespace chipfire {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Row-list literal, e.g. {{2, 4}, {6, 8}}. Throws InputError on ragged rows.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    /// Copy with row r and column c removed.
    IntMatrix without_row_col(std::size_t r, std::size_t c) const;
    /// [this | other]; row counts must match.
    IntMatrix hconcat(const IntMatrix& other) const;

    std::vector<BigInt> column(std::size_t c) const;
    std::vector<BigInt> operator*(const std::vector<BigInt>& x) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Exact determinant by Bareiss fraction-free elimination. The 0x0
/// determinant is 1. Throws InputError for a non-square matrix.
BigInt determinant(const IntMatrix& a);

}  // namespace chipfire
