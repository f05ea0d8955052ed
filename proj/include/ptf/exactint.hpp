#pragma once

// Exact integer linear algebra over arbitrary-precision integers.

#include "ptf/common.hpp"
#include "ptf/matrix.hpp"

#include <algorithm>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace ptf {

struct PivotSelection {
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Thrown by pivot_columns when the input does not have full row rank.
class RankDeficient : public InvalidInput {
public:
    RankDeficient(PivotSelection partial, std::size_t rows)
        : InvalidInput("matrix is rank deficient: rank " + std::to_string(partial.rank) + " < " +
                       std::to_string(rows) + " rows"),
          selection(std::move(partial)) {}

    PivotSelection selection;
};

/// Fraction-free (Bareiss) determinant. Pivot: topmost nonzero entry of the current column.
template <typename T>
BigInt bareiss_det(const Matrix<T>& m) {
    if (!m.square()) throw InvalidInput("determinant of a non-square matrix");
    const std::size_t size = m.rows();
    if (size == 0) return 1;
    IntMatrix a = m.template cast<BigInt>();
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < size && a(swap_row, k) == 0) ++swap_row;
            if (swap_row == size) return 0;
            for (std::size_t c = k; c < size; ++c) std::swap(a(k, c), a(swap_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    BigInt det = a(size - 1, size - 1);
    if (sign < 0) det = -det;
    return det;
}

/// Greedy leftmost pivot columns under fraction-free row echelon reduction
/// (leftmost nonzero column, topmost nonzero row). Throws RankDeficient unless
/// the rank equals the row count.
template <typename T>
PivotSelection pivot_columns(const Matrix<T>& m) {
    IntMatrix a = m.template cast<BigInt>();
    PivotSelection sel;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    BigInt prev = 1;
    std::size_t k = 0;
    for (std::size_t col = 0; col < cols && k < rows; ++col) {
        std::size_t piv = k;
        while (piv < rows && a(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != k)
            for (std::size_t c = col; c < cols; ++c) std::swap(a(k, c), a(piv, c));
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a(i, j) = a(k, col) * a(i, j) - a(i, col) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, col) = 0;
        }
        prev = a(k, col);
        sel.pivot_cols.push_back(col);
        ++k;
    }
    sel.rank = sel.pivot_cols.size();
    if (sel.rank != rows) throw RankDeficient(std::move(sel), rows);
    return sel;
}

template <typename T>
std::vector<BigInt> multiply(const Matrix<T>& m, const std::vector<BigInt>& x) {
    if (x.size() != m.cols()) throw InvalidInput("dimension mismatch in matrix-vector product");
    std::vector<BigInt> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BigInt acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& e = m(r, c);
            if constexpr (std::is_same_v<T, std::int8_t>) {
                if (e == 1) acc += x[c];
                else if (e == -1) acc -= x[c];
                else if (e != 0) acc += BigInt(static_cast<long>(e)) * x[c];
            } else {
                acc += BigInt(e) * x[c];
            }
        }
        out[r] = std::move(acc);
    }
    return out;
}

/// Throws VerificationFailure unless m * x == r * 1 exactly.
template <typename T>
void check_solves_ones(const Matrix<T>& m, const std::vector<BigInt>& x, const BigInt& r) {
    const auto prod = multiply(m, x);
    for (const auto& v : prod)
        if (v != r) throw VerificationFailure("linear solve postcondition M*x == r*1 violated");
}

/// Solves M x = r*1 by Cramer's rule: x_j = det(M_j) / det(M) with column j of M
/// replaced by r*1. det(M) is computed once and each column-replaced determinant
/// independently. Throws if M is singular or r does not make x integral.
template <typename T>
std::vector<BigInt> cramer_solve_ones(const Matrix<T>& m, const BigInt& r) {
    if (!m.square()) throw InvalidInput("cramer_solve_ones needs a square matrix");
    if (r <= 0) throw InvalidInput("cramer_solve_ones needs r > 0");
    const IntMatrix a = m.template cast<BigInt>();
    const BigInt det = bareiss_det(a);
    if (det == 0) throw InvalidInput("cramer_solve_ones: singular matrix");
    const std::size_t size = a.rows();
    std::vector<BigInt> x(size);
    for (std::size_t j = 0; j < size; ++j) {
        IntMatrix aj = a;
        for (std::size_t i = 0; i < size; ++i) aj(i, j) = r;
        const BigInt dj = bareiss_det(aj);
        if (!mpz_divisible_p(dj.get_mpz_t(), det.get_mpz_t()))
            throw InvalidInput("cramer_solve_ones: r does not yield an integral solution");
        mpz_divexact(x[j].get_mpz_t(), dj.get_mpz_t(), det.get_mpz_t());
    }
    check_solves_ones(a, x, r);
    return x;
}

template <typename T>
bool is_sign_matrix(const Matrix<T>& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& e : m.row(r))
            if (!(e == 1 || e == -1)) return false;
    return true;
}

/// Determinant of an m x m +-1 matrix is divisible by 2^(m-1).
template <typename T>
bool hastad_divisibility(const Matrix<T>& m) {
    if (!m.square()) throw InvalidInput("hastad_divisibility needs a square matrix");
    if (!is_sign_matrix(m)) throw InvalidInput("hastad_divisibility needs +-1 entries");
    if (m.rows() == 0) return true;
    const BigInt det = bareiss_det(m);
    return mpz_divisible_2exp_p(det.get_mpz_t(), m.rows() - 1) != 0;
}

}  // namespace ptf
