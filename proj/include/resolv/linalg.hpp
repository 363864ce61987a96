#ifndef RESOLV_LINALG_HPP
#define RESOLV_LINALG_HPP

#include <optional>
#include <vector>

#include "resolv/rational.hpp"

namespace resolv {

/// Solve A x = b exactly over the rationals (Gaussian elimination with
/// partial pivoting by nonzero entry).  Returns nullopt when inconsistent;
/// free variables, if any, are set to zero.
inline std::optional<std::vector<BigRat>> solve_linear(
    std::vector<std::vector<BigRat>> a, std::vector<BigRat> b) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<int> pivot_col_of_row;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[r]);
        std::swap(b[pr], b[r]);
        BigRat inv = BigRat(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            BigRat f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col_of_row.push_back(static_cast<int>(c));
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<BigRat> x(cols, BigRat(0));
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
        x[static_cast<size_t>(pivot_col_of_row[i])] = b[i];
    return x;
}

}  // namespace resolv

#endif
