#pragma once

// Splitting a function on x_n into the F and G row blocks of H_{n-1}.
//
// Row i of H_{n-1} (d_i) goes to F, signed by f_up[i], when f does not change as x_n
// flips at position i; otherwise it goes to G signed by -f_lo[i]. Both blocks are kept
// as signed row references; dense matrices are built only at the solver boundary.

#include "ptf/boolfn.hpp"
#include "ptf/common.hpp"
#include "ptf/matrix.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ptf {

struct SignedRow {
    int sign = 1;
    std::size_t row_index = 0;

    friend bool operator==(const SignedRow&, const SignedRow&) = default;
};

struct FgDecomposition {
    int n = 0;
    std::vector<SignedRow> f_rows;
    std::vector<SignedRow> g_rows;

    std::size_t half_size() const noexcept { return std::size_t{1} << (n - 1); }
};

inline FgDecomposition fg_decompose(const BooleanFunction& f) {
    if (f.n() < 1) throw InvalidInput("fg_decompose requires n >= 1");
    FgDecomposition d;
    d.n = f.n();
    const std::size_t half = f.size() / 2;
    for (std::size_t i = 0; i < half; ++i) {
        const int up = f[i];
        const int lo = f[i + half];
        if (up == lo)
            d.f_rows.push_back({up, i});
        else
            d.g_rows.push_back({-lo, i});
    }
    return d;
}

/// Dense +-1 matrix with entry [r][c] = sign_r * H_order[row_index_r][c].
inline SignMatrix materialize(std::span<const SignedRow> rows, int order) {
    if (order < 0 || order > kMaxVars) throw InvalidInput("materialize: order out of range");
    const std::size_t cols = std::size_t{1} << order;
    SignMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].row_index >= cols) throw InvalidInput("materialize: row index out of range");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = static_cast<std::int8_t>(rows[r].sign * hadamard_sign(rows[r].row_index, c));
    }
    return m;
}

/// Same as materialize, restricted to the listed columns.
inline SignMatrix materialize_columns(std::span<const SignedRow> rows, std::span<const std::size_t> columns) {
    SignMatrix m(rows.size(), columns.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t k = 0; k < columns.size(); ++k)
            m(r, k) = static_cast<std::int8_t>(rows[r].sign * hadamard_sign(rows[r].row_index, columns[k]));
    return m;
}

/// Signed sum of rows, sum_r sign_r * d_{row_r}, via one Walsh transform of the
/// sparse +-1 indicator (O(N log N) instead of O(N * rows)).
inline std::vector<std::int64_t> signed_row_sum(std::span<const SignedRow> rows, int order, int scale = 1) {
    std::vector<std::int64_t> acc(std::size_t{1} << order, 0);
    for (const auto& r : rows) acc[r.row_index] += scale * r.sign;
    fwht_inplace(std::span<std::int64_t>(acc));
    return acc;
}

/// 1^T [F; g_sign * G]
inline std::vector<std::int64_t> stack_row_sums(const FgDecomposition& d, int g_sign) {
    if (g_sign != 1 && g_sign != -1) throw InvalidInput("g_sign must be +1 or -1");
    std::vector<std::int64_t> acc(d.half_size(), 0);
    for (const auto& r : d.f_rows) acc[r.row_index] += r.sign;
    for (const auto& r : d.g_rows) acc[r.row_index] += g_sign * r.sign;
    fwht_inplace(std::span<std::int64_t>(acc));
    return acc;
}

}  // namespace ptf
