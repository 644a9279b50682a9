#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace pdwbc {

/*
 * Exact determinant by fraction-free (Bareiss) elimination over any exact
 * field with +, -, *, / and an is_zero() test. Each interior division is
 * exact by the Sylvester identity, which keeps intermediate entries the size
 * of minors instead of the products a naive Gaussian sweep accumulates.
 */
template <typename F>
F det_exact(std::vector<std::vector<F>> m) {
    const size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("det_exact: matrix is not square");
    }
    if (n == 0) return F(1);

    F prev_pivot(1);
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return F(0);
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev_pivot;
            }
            m[i][k] = F(0);
        }
        prev_pivot = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

} // namespace pdwbc
