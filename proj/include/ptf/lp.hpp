#pragma once

// Exact feasibility of { w : A w >= 1 }, w free, by phase-one simplex over the rationals
// (Bland's rule, so it terminates). Infeasibility is decided exactly; a feasible verdict
// returns a witness that the caller can check with integer arithmetic.

#include "ptf/common.hpp"
#include "ptf/matrix.hpp"

#include <optional>
#include <vector>

namespace ptf {

using Rational = mpq_class;

template <typename T>
std::optional<std::vector<Rational>> feasible_at_least_one(const Matrix<T>& a) {
    const std::size_t m = a.rows();
    const std::size_t k = a.cols();
    // columns: w+ (k), w- (k), surplus (m), artificial (m), rhs
    const std::size_t n_struct = 2 * k + m;
    const std::size_t n_cols = n_struct + m;
    const std::size_t rhs = n_cols;
    std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(n_cols + 1, 0));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            t[i][j] = Rational(static_cast<long>(a(i, j)));
            t[i][k + j] = -t[i][j];
        }
        t[i][2 * k + i] = -1;
        t[i][n_struct + i] = 1;
        t[i][rhs] = 1;
        basis[i] = n_struct + i;
    }
    // objective row: minimize sum of artificials, expressed in nonbasic terms
    auto& obj = t[m];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n_cols; ++j)
            if (j < n_struct || j == rhs) obj[j] -= t[i][j];

    while (true) {
        std::size_t enter = n_cols;
        for (std::size_t j = 0; j < n_cols; ++j)
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        if (enter == n_cols) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded direction cannot occur in phase one
        const Rational piv = t[leave][enter];
        for (auto& e : t[leave]) e /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational factor = t[i][enter];
            for (std::size_t j = 0; j <= n_cols; ++j)
                if (t[leave][j] != 0) t[i][j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
    }
    if (obj[rhs] != 0) return std::nullopt;

    std::vector<Rational> w(k, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < k)
            w[basis[i]] += t[i][rhs];
        else if (basis[i] < 2 * k)
            w[basis[i] - k] -= t[i][rhs];
    }
    return w;
}

}  // namespace ptf
