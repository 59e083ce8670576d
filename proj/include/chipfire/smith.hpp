#pragma once

#include <vector>

#include "chipfire/bigint.hpp"
#include "chipfire/int_matrix.hpp"

namespace chipfire {

/// u * a * v == s, with u and v unimodular and s diagonal.
struct SnfResult {
    IntMatrix u;  // rows x rows
    IntMatrix s;  // rows x cols
    IntMatrix v;  // cols x cols
    /// min(rows, cols) entries: nonnegative, each nonzero entry divides the
    /// next, zeros last. Unit entries are kept.
    std::vector<BigInt> diagonal;

    /// Number of nonzero diagonal entries.
    std::size_t rank() const;
};

/// Smith normal form with unimodular witnesses. The pivot is always a
/// nonzero entry of least absolute value in the remaining submatrix.
SnfResult smith_normal_form(const IntMatrix& a);

/// Columns form a basis of the integer kernel {x in Z^cols : a x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

}  // namespace chipfire
