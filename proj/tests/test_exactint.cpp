#include "ptf/exactint.hpp"
#include "ptf/modular.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace ptf;

namespace {

SignMatrix random_signs(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    SignMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = (rng() & 1) ? -1 : 1;
    return m;
}

// Laplace expansion along the first row.
BigInt cofactor_det(const IntMatrix& m) {
    const std::size_t s = m.rows();
    if (s == 0) return 1;
    if (s == 1) return m(0, 0);
    BigInt acc = 0;
    for (std::size_t c = 0; c < s; ++c) {
        IntMatrix minor(s - 1, s - 1);
        for (std::size_t r = 1; r < s; ++r)
            for (std::size_t k = 0, kk = 0; k < s; ++k)
                if (k != c) minor(r - 1, kk++) = m(r, k);
        const BigInt term = m(0, c) * cofactor_det(minor);
        acc += (c % 2 == 0) ? term : BigInt(-term);
    }
    return acc;
}

// Rows of H_order chosen by index.
SignMatrix hadamard_rows(const std::vector<std::size_t>& rows, int order) {
    const std::size_t size = std::size_t{1} << order;
    SignMatrix m(rows.size(), size);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < size; ++c) m(r, c) = static_cast<std::int8_t>(hadamard_sign(rows[r], c));
    return m;
}

}  // namespace

TEST(BareissDet, Examples) {
    EXPECT_EQ(bareiss_det(IntMatrix{{1}}), 1);
    EXPECT_EQ(bareiss_det(IntMatrix{{1, 1}, {1, -1}}), -2);
    EXPECT_EQ(bareiss_det(IntMatrix{{1, 1, 1}, {1, -1, 1}, {1, 1, -1}}), 4);
    EXPECT_EQ(bareiss_det(IntMatrix(0, 0)), 1);
    EXPECT_EQ(bareiss_det(IntMatrix{{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(bareiss_det(IntMatrix{{1, 2}, {2, 4}}), 0);
    EXPECT_THROW(bareiss_det(IntMatrix{{1, 2}}), InvalidInput);
}

TEST(BareissDet, MatchesCofactorExpansion) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const std::size_t s = 1 + t % 7;
        IntMatrix m(s, s);
        for (std::size_t r = 0; r < s; ++r)
            for (std::size_t c = 0; c < s; ++c) m(r, c) = static_cast<long>(rng() % 7) - 3;
        ASSERT_EQ(bareiss_det(m), cofactor_det(m));
    }
}

TEST(PivotColumns, Examples) {
    EXPECT_EQ(pivot_columns(IntMatrix{{1, 1}, {1, -1}}).pivot_cols, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(pivot_columns(IntMatrix{{1, 1, 1, 1}, {1, -1, 1, -1}}).pivot_cols, (std::vector<std::size_t>{0, 1}));
    const auto empty = pivot_columns(IntMatrix(0, 4));
    EXPECT_TRUE(empty.pivot_cols.empty());
    EXPECT_EQ(empty.rank, 0u);
}

TEST(PivotColumns, RankDeficientCarriesPartialSelection) {
    try {
        pivot_columns(IntMatrix{{1, 1, 1}, {-1, -1, -1}});
        FAIL() << "expected RankDeficient";
    } catch (const RankDeficient& e) {
        EXPECT_EQ(e.selection.rank, 1u);
    }
}

TEST(PivotColumns, SelectedBlockIsInvertible) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        const int order = 2 + t % 4;
        const std::size_t size = std::size_t{1} << order;
        std::vector<std::size_t> rows(size);
        std::iota(rows.begin(), rows.end(), 0);
        std::shuffle(rows.begin(), rows.end(), rng);
        rows.resize(1 + rng() % size);
        const auto m = hadamard_rows(rows, order);
        const auto sel = pivot_columns(m);
        ASSERT_EQ(sel.rank, rows.size());
        ASSERT_NE(bareiss_det(m.select_columns(sel.pivot_cols)), 0);
    }
}

TEST(PivotColumns, ModularAgreesWithExact) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        const int order = 3 + t % 4;
        const std::size_t size = std::size_t{1} << order;
        std::vector<std::size_t> rows(size);
        std::iota(rows.begin(), rows.end(), 0);
        std::shuffle(rows.begin(), rows.end(), rng);
        rows.resize(1 + rng() % size);
        const auto m = hadamard_rows(rows, order);
        const auto modular = modular::pivot_columns_mod(m, modular::prime_at(0));
        ASSERT_TRUE(modular.has_value());
        ASSERT_EQ(modular->pivot_cols, pivot_columns(m).pivot_cols);
    }
}

TEST(CramerSolveOnes, Examples) {
    EXPECT_EQ(cramer_solve_ones(IntMatrix{{1}}, 1), (std::vector<BigInt>{1}));
    EXPECT_EQ(cramer_solve_ones(IntMatrix{{1, 1}, {1, -1}}, 2), (std::vector<BigInt>{2, 0}));
    const IntMatrix m{{1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
    const auto x = cramer_solve_ones(m, 1);
    EXPECT_EQ(x, (std::vector<BigInt>{1, 0, 0}));
    EXPECT_EQ(multiply(m, x), (std::vector<BigInt>{1, 1, 1}));
}

TEST(CramerSolveOnes, Errors) {
    EXPECT_THROW(cramer_solve_ones(IntMatrix{{1, 1}, {1, 1}}, 1), InvalidInput);
    EXPECT_THROW(cramer_solve_ones(IntMatrix{{2, 0}, {0, 1}}, 1), InvalidInput);
    EXPECT_THROW(cramer_solve_ones(IntMatrix{{1}}, 0), InvalidInput);
}

TEST(CramerSolveOnes, RandomSignMatricesAtScaledDeterminant) {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 200; ++t) {
        const std::size_t s = 1 + t % 8;
        const auto m = random_signs(s, s, rng);
        const BigInt det = bareiss_det(m);
        if (det == 0) continue;
        const BigInt r = abs(det);
        const auto x = cramer_solve_ones(m, r);
        for (const auto& v : multiply(m, x)) ASSERT_EQ(v, r);
    }
}

TEST(HastadDivisibility, Examples) {
    EXPECT_TRUE(hastad_divisibility(IntMatrix{{1, 1}, {1, -1}}));
    EXPECT_TRUE(hastad_divisibility(IntMatrix{{1}}));
    EXPECT_THROW(hastad_divisibility(IntMatrix{{1, 0}, {1, 1}}), InvalidInput);
}

TEST(HastadDivisibility, RandomFiveByFive) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 1000; ++t) ASSERT_TRUE(hastad_divisibility(random_signs(5, 5, rng)));
}

TEST(Modular, PrimesAreDescendingAndPrime) {
    std::uint32_t prev = 0x80000000u;
    for (std::size_t i = 0; i < 20; ++i) {
        const auto p = modular::prime_at(i);
        ASSERT_LT(p, prev);
        for (std::uint32_t d = 2; d * d <= 1000 && d < p; ++d) ASSERT_NE(p % d, 0u);
        prev = p;
    }
    EXPECT_TRUE(modular::is_prime_u32(2147483647u));
    EXPECT_TRUE(modular::is_prime_u32(4294967291u));
    EXPECT_FALSE(modular::is_prime_u32(4294967295u));
    EXPECT_FALSE(modular::is_prime_u32(561));
}

TEST(Modular, RationalReconstruction) {
    const BigInt modulus = BigInt(modular::prime_at(0)) * modular::prime_at(1);
    // 7 / 12 mod M
    BigInt inv;
    const BigInt twelve = 12;
    mpz_invert(inv.get_mpz_t(), twelve.get_mpz_t(), modulus.get_mpz_t());
    const BigInt t = (7 * inv) % modulus;
    const auto rat = modular::rational_reconstruct(t, modulus, 1000, 1000);
    ASSERT_TRUE(rat.has_value());
    EXPECT_EQ(rat->first, 7);
    EXPECT_EQ(rat->second, 12);
}

TEST(Modular, PadicAgreesWithCramer) {
    std::mt19937_64 rng(37);
    for (std::size_t s = 17; s <= 40; ++s) {
        const auto m = random_signs(s, s, rng);
        const BigInt det = bareiss_det(m);
        if (det == 0) continue;
        const auto sol = modular::solve_ones_padic(m);
        ASSERT_EQ(sol.det, det) << "size " << s;
        const BigInt r = abs(det);
        const auto x = cramer_solve_ones(m, r);
        for (std::size_t j = 0; j < s; ++j) ASSERT_EQ(x[j] * sol.denominator, r * sol.numerators[j]);
    }
}

TEST(Modular, PadicOnHadamardBlocks) {
    std::mt19937_64 rng(41);
    const int order = 6;
    for (int t = 0; t < 10; ++t) {
        std::vector<std::size_t> rows(64);
        std::iota(rows.begin(), rows.end(), 0);
        std::shuffle(rows.begin(), rows.end(), rng);
        rows.resize(20 + rng() % 12);
        const auto m = hadamard_rows(rows, order);
        const auto sel = pivot_columns(m);
        const auto block = m.select_columns(sel.pivot_cols);
        const auto sol = modular::solve_ones_padic(block);
        EXPECT_EQ(sol.det, bareiss_det(block));
    }
}

TEST(Modular, SingularMatrixIsRejected) {
    SignMatrix m(18, 18, 1);
    EXPECT_THROW(modular::solve_ones_padic(m), InvalidInput);
}
