#pragma once

// General integer PTF synthesis with at most 0.75 * 2^n monomials.
//
// With F, G the row blocks of fg_decompose, every sign representation is
//   u = (a + a')F + (-c + c')G,   v = (-a + a')F + (c + c')G,   a, a', c, c' > 0.
// When #G >= #F we pick #G pivot columns P of G, solve F2 x = r*1 on the remaining
// columns and take a = a' = r/2. Orthogonality of [F; G] then zeroes u on P and
// leaves 2^(n-1) x on the rest, while c + c' = |G2 x| + 1 keeps v integral.
// The #F > #G case swaps the roles of (u, F) and (v, G).

#include "ptf/boolfn.hpp"
#include "ptf/common.hpp"
#include "ptf/decompose.hpp"
#include "ptf/exactint.hpp"
#include "ptf/modular.hpp"
#include "ptf/ptf.hpp"
#include "ptf/verify.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ptf {

inline constexpr int kMaxSynthVars = 12;

enum class Half { u, v };

inline const char* to_string(Half h) { return h == Half::u ? "u" : "v"; }

struct SynthesisCertificate {
    std::string method = "general";
    std::size_t f_count = 0;
    std::size_t g_count = 0;
    Half zeroed_half = Half::u;
    std::vector<std::size_t> pivot_cols;
    BigInt r = 1;
    BigInt max_abs_x = 0;
    BigInt bound_x = 0;
    BigInt bound_w = 0;
    BigInt max_abs_coeff = 0;
    std::vector<BigInt> margins;
    BigInt min_margin = 0;
    bool verified = false;
    bool x_bound_ok = false;
    bool w_bound_ok = false;

    bool all_ok() const noexcept { return verified && x_bound_ok && w_bound_ok; }
};

struct Synthesis {
    Ptf ptf;
    SynthesisCertificate certificate;
};

/// ceil(2^(2-k) * k * (k-1)^((k-1)/2)); k is the size of the solved block.
/// The empty block (k = 0) has no x; it contributes the neutral factor 1.
inline BigInt bound_x(std::size_t k) {
    if (k == 0) return 1;
    if (k == 1) return 2;
    const BigInt radicand = BigInt(k) * BigInt(k) * ipow(static_cast<unsigned long>(k - 1), k - 1);
    return ceil_div(ceil_sqrt(radicand), pow2(k - 2));
}

/// max{f*g + other, 2^(n-1)} * bound_x(solved), where the solved block is F when
/// g >= f and G otherwise, and "other" is the size of the remaining block.
inline BigInt bound_w(std::size_t f_count, std::size_t g_count, int n) {
    if (n < 1) throw InvalidInput("bound_w: n must be >= 1");
    const bool solve_f = g_count >= f_count;
    const std::size_t solved = solve_f ? f_count : g_count;
    const std::size_t other = solve_f ? g_count : f_count;
    const BigInt lhs = BigInt(f_count) * BigInt(g_count) + BigInt(other);
    const BigInt half = pow2(static_cast<unsigned long>(n - 1));
    return (lhs > half ? lhs : half) * bound_x(solved);
}

/// weight <= 0.75 * 2^n * 2^(n 2^(n-3) - 2^(n-1) + 4n), compared exactly. The exponent is
/// a multiple of 1/4, so both sides are raised to the 4th power.
inline bool global_weight_bound_holds(const BigInt& weight, int n) {
    if (n < 1) throw InvalidInput("global weight bound: n must be >= 1");
    const auto nn = static_cast<unsigned long>(n);
    // 4 * exponent = n 2^(n-1) - 2^(n+1) + 16 n  (positive for n >= 1)
    const BigInt four_e = BigInt(nn) * pow2(nn - 1) - pow2(nn + 1) + BigInt(16 * nn);
    const BigInt lhs = BigInt(4) * weight;
    BigInt lhs4 = lhs * lhs;
    lhs4 *= lhs4;
    BigInt rhs = BigInt(3) * pow2(nn);
    BigInt rhs4 = rhs * rhs;
    rhs4 *= rhs4;
    rhs4 *= pow2(four_e.get_ui());
    return lhs4 <= rhs4;
}

namespace detail {

inline constexpr std::size_t kExactPivotRows = 24;
inline constexpr std::size_t kCramerBlock = 16;

inline PivotSelection select_pivots(std::span<const SignedRow> rows, int order) {
    const SignMatrix m = materialize(rows, order);
    if (rows.size() <= kExactPivotRows) return pivot_columns(m);
    for (std::size_t i = 0; i < 3; ++i)
        if (auto sel = modular::pivot_columns_mod(m, modular::prime_at(i))) return *sel;
    return pivot_columns(m);
}

/// r = |det A| / 2^max(k-2, 0) and x with A x = r * 1.
inline std::pair<BigInt, std::vector<BigInt>> solve_block(const SignMatrix& a) {
    const std::size_t k = a.rows();
    const BigInt divisor = pow2(k >= 2 ? k - 2 : 0);
    BigInt r;
    std::vector<BigInt> x;
    if (k <= kCramerBlock) {
        const BigInt det = bareiss_det(a);
        if (det == 0) throw VerificationFailure("solved block is singular");
        r = abs(det);
        if (!mpz_divisible_p(r.get_mpz_t(), divisor.get_mpz_t()))
            throw VerificationFailure("block determinant not divisible by 2^(k-2)");
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), divisor.get_mpz_t());
        x = cramer_solve_ones(a, r);
    } else {
        auto sol = modular::solve_ones_padic(a);
        r = abs(sol.det);
        if (!mpz_divisible_p(r.get_mpz_t(), divisor.get_mpz_t()))
            throw VerificationFailure("block determinant not divisible by 2^(k-2)");
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), divisor.get_mpz_t());
        x.resize(k);
        for (std::size_t j = 0; j < k; ++j) {
            BigInt num = r * sol.numerators[j];
            if (!mpz_divisible_p(num.get_mpz_t(), sol.denominator.get_mpz_t()))
                throw VerificationFailure("block solution is not integral");
            mpz_divexact(x[j].get_mpz_t(), num.get_mpz_t(), sol.denominator.get_mpz_t());
        }
        check_solves_ones(a, x, r);
    }
    return {std::move(r), std::move(x)};
}

/// sum_i coeff_i * sign_i * d_{row_i}
inline std::vector<BigInt> weighted_row_sum(std::span<const SignedRow> rows, std::span<const BigInt> coeff,
                                            std::size_t width) {
    std::vector<BigInt> acc(width, 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].sign > 0)
            acc[rows[i].row_index] += coeff[i];
        else
            acc[rows[i].row_index] -= coeff[i];
    }
    fwht_inplace(std::span<BigInt>(acc));
    return acc;
}

inline void finish_certificate(const BooleanFunction& f, const Ptf& p, SynthesisCertificate& cert) {
    auto report = make_report(margins_by_transform(f, p));
    cert.margins = std::move(report.margins);
    cert.min_margin = report.min_margin;
    cert.verified = report.matches;
    cert.max_abs_coeff = p.max_abs_coeff();
}

}  // namespace detail

inline Synthesis synthesize_general(const BooleanFunction& f) {
    const int n = f.n();
    if (n < 1 || n > kMaxSynthVars)
        throw SizeGuard("synthesize_general supports 1 <= n <= " + std::to_string(kMaxSynthVars));
    const FgDecomposition d = fg_decompose(f);
    const std::size_t half = d.half_size();

    SynthesisCertificate cert;
    cert.f_count = d.f_rows.size();
    cert.g_count = d.g_rows.size();
    const bool solve_u = cert.g_count >= cert.f_count;
    cert.zeroed_half = solve_u ? Half::u : Half::v;
    const auto& solved_rows = solve_u ? d.f_rows : d.g_rows;
    const auto& pivot_rows = solve_u ? d.g_rows : d.f_rows;

    if (pivot_rows.size() == half) {
        // signed rows of a full Hadamard matrix: every column is a pivot
        cert.pivot_cols.resize(half);
        for (std::size_t c = 0; c < half; ++c) cert.pivot_cols[c] = c;
    } else if (!pivot_rows.empty()) {
        cert.pivot_cols = detail::select_pivots(pivot_rows, n - 1).pivot_cols;
    }

    std::vector<std::size_t> free_cols;
    free_cols.reserve(half - cert.pivot_cols.size());
    for (std::size_t c = 0, p = 0; c < half; ++c) {
        if (p < cert.pivot_cols.size() && cert.pivot_cols[p] == c)
            ++p;
        else
            free_cols.push_back(c);
    }
    if (free_cols.size() != solved_rows.size()) throw VerificationFailure("pivot count does not match block sizes");

    std::vector<BigInt> x;
    if (!solved_rows.empty()) {
        auto [r, sol] = detail::solve_block(materialize_columns(solved_rows, free_cols));
        cert.r = std::move(r);
        x = std::move(sol);
    }

    // x scattered onto the free columns; zero on pivots.
    std::vector<BigInt> x_full(half, 0);
    for (std::size_t j = 0; j < x.size(); ++j) {
        x_full[free_cols[j]] = x[j];
        if (abs(x[j]) > cert.max_abs_x) cert.max_abs_x = abs(x[j]);
    }

    // beta_i = (pivot block restricted to free columns) * x, via H * x_full.
    std::vector<BigInt> hx = x_full;
    fwht_inplace(std::span<BigInt>(hx));
    std::vector<BigInt> combo(pivot_rows.size());
    for (std::size_t i = 0; i < pivot_rows.size(); ++i) {
        const BigInt& beta = hx[pivot_rows[i].row_index];
        combo[i] = abs(beta) + 1;
    }
    std::vector<BigInt> other = detail::weighted_row_sum(pivot_rows, combo, half);

    std::vector<BigInt> solved(half);
    const BigInt scale = pow2(static_cast<unsigned long>(n - 1));
    for (std::size_t c = 0; c < half; ++c) solved[c] = scale * x_full[c];

    Ptf p = solve_u ? assemble_w(solved, other) : assemble_w(other, solved);

    cert.bound_x = bound_x(solved_rows.size());
    cert.bound_w = bound_w(cert.f_count, cert.g_count, n);
    detail::finish_certificate(f, p, cert);
    cert.x_bound_ok = cert.max_abs_x <= cert.bound_x;
    cert.w_bound_ok = cert.max_abs_coeff <= cert.bound_w;
    if (!cert.verified)
        throw VerificationFailure("synthesized polynomial does not sign-represent the input (min margin " +
                                  to_decimal(cert.min_margin) + ")");
    return {std::move(p), std::move(cert)};
}

}  // namespace ptf
