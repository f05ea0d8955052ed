#include "ptf/bent.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace ptf;

namespace {

BooleanFunction fn(std::initializer_list<int> v) {
    std::vector<std::int8_t> values(v.begin(), v.end());
    int n = 0;
    while ((std::size_t{1} << n) < values.size()) ++n;
    return BooleanFunction(n, std::move(values));
}

// x1 x2 xor x3 x4 in bit form
BooleanFunction inner_product4() {
    std::vector<std::int8_t> v(16);
    for (std::size_t j = 0; j < 16; ++j) {
        const int b = ((j & 1) & ((j >> 1) & 1)) ^ (((j >> 2) & 1) & ((j >> 3) & 1));
        v[j] = b ? -1 : 1;
    }
    return BooleanFunction(4, std::move(v));
}

std::vector<BooleanFunction> all_bent4() {
    std::vector<BooleanFunction> out;
    for (std::uint32_t t = 0; t < (1u << 16); ++t) {
        std::vector<std::int8_t> v(16);
        for (std::size_t j = 0; j < 16; ++j) v[j] = ((t >> j) & 1) ? -1 : 1;
        BooleanFunction f(4, std::move(v));
        if (is_bent(f)) out.push_back(std::move(f));
    }
    return out;
}

std::size_t zeros(const std::vector<std::int64_t>& v) {
    return static_cast<std::size_t>(std::count(v.begin(), v.end(), 0));
}

}  // namespace

TEST(DecomposeBent, Examples) {
    const auto d = decompose_bent(fn({1, 1, 1, -1}));
    EXPECT_EQ(d.f_p, fn({1, 1}));
    EXPECT_EQ(d.f_q, fn({1, -1}));
    EXPECT_EQ(d.omega_p.omega, (std::vector<std::int64_t>{2, 0}));
    EXPECT_EQ(d.omega_q.omega, (std::vector<std::int64_t>{0, 2}));
    EXPECT_THROW(decompose_bent(BooleanFunction::constant(2)), NotBent);

    const auto ip = decompose_bent(inner_product4());
    EXPECT_TRUE(classify(ip.f_p).is_semibent);
    EXPECT_TRUE(classify(ip.f_q).is_semibent);
    EXPECT_EQ(ip.omega_p.zero_count(), 4u);
    EXPECT_EQ(ip.omega_q.zero_count(), 4u);
}

TEST(SynthesizeBent, HandCheckedInstance) {
    const auto s = synthesize_bent(fn({1, 1, 1, -1}));
    EXPECT_EQ(s.ptf, Ptf(2, {{0, 2}, {2, 2}, {3, -2}}));
    EXPECT_EQ(s.ptf.density(), 3u);
    EXPECT_EQ(s.certificate.max_abs_coeff, 2);
    EXPECT_EQ(s.certificate.margins, (std::vector<BigInt>{2, 6, 2, 2}));
    EXPECT_EQ(s.certificate.method, "bent");
}

TEST(SynthesizeBent, InnerProduct) {
    const auto s = synthesize_bent(inner_product4());
    EXPECT_TRUE(s.certificate.verified);
    EXPECT_LE(s.ptf.density(), 12u);
    EXPECT_LE(s.certificate.max_abs_coeff, 16);
    EXPECT_LE(s.ptf.weight(), 192);
    EXPECT_THROW(synthesize_bent(BooleanFunction::constant(4)), NotBent);
}

TEST(SynthesizeBent, EveryBentFunctionAtFour) {
    const auto bent = all_bent4();
    EXPECT_EQ(bent.size(), 896u);
    for (const auto& f : bent) {
        for (auto variant : {BentVariant::plus, BentVariant::minus}) {
            const auto s = synthesize_bent(f, variant);
            ASSERT_TRUE(s.certificate.verified);
            ASSERT_LE(s.ptf.density(), 12u);
            ASSERT_LE(s.certificate.max_abs_coeff, 16);
            ASSERT_LE(s.ptf.weight(), 192);
        }
        const auto d = fg_decompose(f);
        ASSERT_EQ(zeros(stack_row_sums(d, 1)), 4u);
        ASSERT_EQ(zeros(stack_row_sums(d, -1)), 4u);
    }
}

TEST(GenerateBent, Examples) {
    const std::uint32_t id2[] = {0, 1};
    EXPECT_TRUE(is_bent(generate_bent(2, id2, {})));
    const std::uint32_t id4[] = {0, 1, 2, 3};
    EXPECT_TRUE(is_bent(generate_bent(4, id4, {})));
    EXPECT_THROW(generate_bent(3, id2, {}), InvalidInput);
    const std::uint32_t dup[] = {0, 0, 2, 3};
    EXPECT_THROW(generate_bent(4, dup, {}), InvalidInput);
}

TEST(GenerateBent, RandomFamiliesSynthesize) {
    std::mt19937_64 rng(67);
    for (int n : {6, 8, 10}) {
        const std::size_t side = std::size_t{1} << (n / 2);
        for (int t = 0; t < 20; ++t) {
            std::vector<std::uint32_t> perm(side);
            std::iota(perm.begin(), perm.end(), 0u);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::uint8_t> offsets(side);
            for (auto& o : offsets) o = rng() & 1;
            const auto f = generate_bent(n, perm, offsets);
            const auto s = synthesize_bent(f);
            ASSERT_TRUE(s.certificate.verified);
            ASSERT_LE(s.certificate.max_abs_coeff, BigInt(1) << n);
            ASSERT_LE(4 * s.ptf.density(), 3 * f.size());
        }
    }
}
