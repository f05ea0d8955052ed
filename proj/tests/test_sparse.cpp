#include "ptf/sparse.hpp"

#include <gtest/gtest.h>

using namespace ptf;

TEST(SparseBounds, Envelope) {
    // ceil(2^(n+2-m) m^((m+3)/2)) and ceil(3 * 2^(2n-m) m^((m+3)/2)) at n = 10, tabulated independently
    struct Row {
        std::size_t m;
        const char* coeff;
        const char* weight;
    };
    const Row expected[] = {
        {0, "4096", "3145728"},
        {1, "2048", "1572864"},
        {2, "5793", "4448732"},
        {4, "32768", "25165824"},
        {8, "1482911", "1138875188"},
        {16, "17179869184", "13194139533312"},
        {32, "208701085205324515398", "160282433437689227825352"},
        {64, "713623846352979940529142984724747568191373312",
         "548063113999088594326381812268606132370974703616"},
    };
    for (const auto& row : expected) {
        const auto b = sparse_bounds(10, row.m);
        EXPECT_EQ(b.coeff_bound, from_decimal(row.coeff)) << "m=" << row.m;
        EXPECT_EQ(b.weight_bound, from_decimal(row.weight)) << "m=" << row.m;
        EXPECT_EQ(b.density_bound, 512 + std::min<std::size_t>(row.m, 256));
    }
    EXPECT_TRUE(sparse_bounds(10, 256).applies);
    EXPECT_FALSE(sparse_bounds(10, 257).applies);
    EXPECT_THROW(sparse_bounds(10, 513), InvalidInput);
}

TEST(SynthesizeSparse, Examples) {
    const auto c = synthesize_sparse(BooleanFunction::constant(4));
    EXPECT_LE(c.synthesis.ptf.density(), 8u);
    EXPECT_TRUE(c.all_ok());

    std::vector<std::int8_t> v(16, 1);
    v[5] = -1;
    const auto one = synthesize_sparse(BooleanFunction(4, v));
    EXPECT_LE(one.synthesis.ptf.density(), 9u);
    EXPECT_TRUE(one.all_ok());

    const auto f = random_sparse(6, 4, 2024);
    const auto s = synthesize_sparse(f);
    EXPECT_LE(s.synthesis.ptf.density(), 36u);
    EXPECT_GE(s.synthesis.certificate.f_count, 28u);
    EXPECT_TRUE(s.all_ok());
    EXPECT_EQ(s.synthesis.certificate.method, "sparse");
}

TEST(RandomSparse, Examples) {
    EXPECT_EQ(random_sparse(3, 0, 99), BooleanFunction::constant(3));
    for (std::uint64_t s = 0; s < 10; ++s) EXPECT_EQ(classify(random_sparse(3, 4, s)).sparsity_m, 4u);
    EXPECT_EQ(random_sparse(4, 2, 42), random_sparse(4, 2, 42));
    EXPECT_THROW(random_sparse(3, 5, 0), InvalidInput);
}

TEST(SynthesizeSparse, AllSparsitiesAtEight) {
    for (std::size_t m = 0; m <= 128; m += (m < 8 ? 1 : 15)) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto f = random_sparse(8, m, seed);
            const auto s = synthesize_sparse(f);
            ASSERT_TRUE(s.all_ok()) << "m=" << m << " seed=" << seed;
            ASSERT_EQ(s.bounds.applies, m <= 64);
        }
    }
}
