#ifndef RESOLV_RESULTANT_HPP
#define RESOLV_RESULTANT_HPP

#include <string>
#include <vector>

#include "resolv/multipoly.hpp"

namespace resolv {

namespace detail {

/// Fraction-free (Bareiss) determinant over the polynomial ring.
inline MultiPoly bareiss_det(std::vector<std::vector<MultiPoly>> m) {
    const size_t n = m.size();
    if (n == 0) return MultiPoly(1);
    MultiPoly prev_pivot(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MultiPoly();  // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_div(num, prev_pivot);
            }
            m[i][k] = MultiPoly();
        }
        prev_pivot = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace detail

/// Sylvester resultant of p and q with respect to `var`, exact over the
/// remaining-variable polynomial ring.
inline MultiPoly resultant(const MultiPoly& p, const MultiPoly& q,
                           const std::string& var) {
    if (p.is_zero() || q.is_zero())
        throw zero_polynomial("resultant: zero input polynomial");
    const int dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp <= 0 || dq <= 0)
        throw zero_polynomial("resultant: inputs must have positive degree in " + var);
    auto cp = p.coeffs_in(var);
    auto cq = q.coeffs_in(var);
    const size_t n = static_cast<size_t>(dp + dq);
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n));
    for (int r = 0; r < dq; ++r)
        for (int k = 0; k <= dp; ++k)
            m[r][r + dp - k] = cp[k];
    for (int r = 0; r < dp; ++r)
        for (int k = 0; k <= dq; ++k)
            m[dq + r][r + dq - k] = cq[k];
    return detail::bareiss_det(std::move(m));
}

}  // namespace resolv

#endif
