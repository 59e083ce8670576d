#include "chipfire/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace chipfire {

namespace {

using Position = std::pair<std::size_t, std::size_t>;

std::optional<Position> smallest_nonzero(const IntMatrix& s, std::size_t from) {
    std::optional<Position> best;
    BigInt best_abs;
    for (std::size_t i = from; i < s.rows(); ++i)
        for (std::size_t j = from; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            BigInt mag = abs(s(i, j));
            if (!best || mag < best_abs) {
                best = Position{i, j};
                best_abs = std::move(mag);
                if (best_abs == 1) return best;
            }
        }
    return best;
}

std::optional<std::size_t> row_with_nondivisible(const IntMatrix& s, std::size_t t) {
    const BigInt& pivot = s(t, t);
    for (std::size_t i = t + 1; i < s.rows(); ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
            if (!big_divides(pivot, s(i, j))) return i;
    return std::nullopt;
}

}  // namespace

std::size_t SnfResult::rank() const {
    return static_cast<std::size_t>(
        std::count_if(diagonal.begin(), diagonal.end(), [](const BigInt& d) { return d != 0; }));
}

SnfResult smith_normal_form(const IntMatrix& a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    IntMatrix s = a;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        bool exhausted = false;
        while (true) {
            const auto pos = smallest_nonzero(s, t);
            if (!pos) {
                exhausted = true;
                break;
            }
            s.swap_rows(t, pos->first);
            u.swap_rows(t, pos->first);
            s.swap_cols(t, pos->second);
            v.swap_cols(t, pos->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                const BigInt q = big_tdiv(s(i, t), s(t, t));
                if (q != 0) {
                    s.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                }
                if (s(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                const BigInt q = big_tdiv(s(t, j), s(t, t));
                if (q != 0) {
                    s.add_col_multiple(j, t, -q);
                    v.add_col_multiple(j, t, -q);
                }
                if (s(t, j) != 0) clean = false;
            }
            // A nonzero remainder is smaller than the pivot; go again.
            if (!clean) continue;

            // Pivot must divide the rest; otherwise fold the offending row
            // into row t, which leaves a remainder on the next pass.
            if (const auto bad = row_with_nondivisible(s, t)) {
                s.add_row_multiple(t, *bad, 1);
                u.add_row_multiple(t, *bad, 1);
                continue;
            }
            break;
        }
        if (exhausted) break;
        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }

    std::vector<BigInt> diagonal(steps);
    for (std::size_t i = 0; i < steps; ++i) diagonal[i] = s(i, i);
    return SnfResult{std::move(u), std::move(s), std::move(v), std::move(diagonal)};
}

IntMatrix integer_kernel(const IntMatrix& a) {
    const SnfResult snf = smith_normal_form(a);
    const std::size_t rank = snf.rank();
    const std::size_t cols = a.cols();
    IntMatrix kernel(cols, cols - rank);
    for (std::size_t j = rank; j < cols; ++j)
        for (std::size_t i = 0; i < cols; ++i) kernel(i, j - rank) = snf.v(i, j);
    return kernel;
}

}  // namespace chipfire
