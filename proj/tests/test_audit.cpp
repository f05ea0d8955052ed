#include "ptf/audit.hpp"

#include <gtest/gtest.h>

#include <map>
#include <sstream>

using namespace ptf;

namespace {

BooleanFunction fn(std::initializer_list<int> v) {
    std::vector<std::int8_t> values(v.begin(), v.end());
    int n = 0;
    while ((std::size_t{1} << n) < values.size()) ++n;
    return BooleanFunction(n, std::move(values));
}

}  // namespace

TEST(LpFeasibility, SmallSystems) {
    // w >= 1 and -w >= 1 is infeasible
    EXPECT_FALSE(feasible_at_least_one(Matrix<long>{{1}, {-1}}).has_value());
    const auto w = feasible_at_least_one(Matrix<long>{{1, 1}, {1, -1}});
    ASSERT_TRUE(w.has_value());
    EXPECT_GE((*w)[0] + (*w)[1], 1);
    EXPECT_GE((*w)[0] - (*w)[1], 1);
}

TEST(Oracle, Examples) {
    EXPECT_EQ(oracle_min_density(BooleanFunction::constant(2), 4), 1u);
    EXPECT_EQ(oracle_min_density(fn({1, -1, -1, 1}), 4), 1u);
    EXPECT_EQ(oracle_min_density(fn({1, 1, 1, -1}), 4), 3u);
    EXPECT_EQ(oracle_min_density(fn({1, 1, 1, -1}), 2), std::nullopt);
    EXPECT_THROW(oracle_min_density(BooleanFunction::constant(5), 1), SizeGuard);
}

TEST(Oracle, ThreeVariableHistogram) {
    // independent LP enumeration: 16 functions need 1 term, 112 need 3, 128 need 4
    std::map<std::size_t, std::size_t> hist;
    for (std::uint64_t t = 0; t < 256; ++t) {
        const auto f = function_from_index(3, t);
        const auto k = oracle_min_density(f, 8);
        ASSERT_TRUE(k.has_value());
        ++hist[*k];
        ASSERT_LE(*k, evaluate_function(f).density);
    }
    EXPECT_EQ(hist, (std::map<std::size_t, std::size_t>{{1, 16}, {3, 112}, {4, 128}}));
    EXPECT_EQ(oracle_min_density(parse_truth_table("00000001", TableFormat::binary), 8), 4u);
}

TEST(FunctionIndex, HexMatchesIndex) {
    EXPECT_EQ(format_truth_table(function_from_index(2, 1), TableFormat::hex), "1");
    EXPECT_EQ(format_truth_table(function_from_index(3, 0xa5), TableFormat::hex), "a5");
}

TEST(Sweep, ExhaustiveTwo) {
    const auto r = sweep({.n = 2, .exhaustive = true});
    EXPECT_EQ(r.rows.size(), 16u);
    EXPECT_EQ(r.summary.violations, 0u);
    EXPECT_LE(r.summary.max_density, 3u);
    EXPECT_EQ(r.summary.bent_count, 8u);
}

TEST(Sweep, ExhaustiveThree) {
    const auto r = sweep({.n = 3, .exhaustive = true, .workers = 4});
    EXPECT_EQ(r.rows.size(), 256u);
    EXPECT_EQ(r.summary.violations, 0u);
    EXPECT_LE(r.summary.max_density, 6u);
}

TEST(Sweep, SampleIsDeterministicAcrossWorkerCounts) {
    const SweepOptions one{.n = 6, .exhaustive = false, .count = 60, .seed = 5, .workers = 1};
    SweepOptions many = one;
    many.workers = 7;
    std::ostringstream a;
    std::ostringstream b;
    write_csv(a, sweep(one).rows);
    write_csv(b, sweep(many).rows);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str().rfind(kSweepCsvHeader, 0), 0u);
}

TEST(Sweep, SampleAtEight) {
    const auto r = sweep({.n = 8, .exhaustive = false, .count = 1000, .seed = 8, .workers = 8});
    EXPECT_EQ(r.rows.size(), 1000u);
    EXPECT_EQ(r.summary.violations, 0u);
}

TEST(Sweep, Guards) {
    EXPECT_THROW(sweep({.n = 1}), InvalidInput);
    EXPECT_THROW(sweep({.n = 5, .exhaustive = true}), SizeGuard);
    EXPECT_THROW(sweep({.n = 13, .exhaustive = false, .count = 1}), SizeGuard);
}

TEST(Sweep, ShadowRunsAgreeWithGeneralPath) {
    const auto r = sweep({.n = 4, .exhaustive = false, .count = 400, .seed = 1, .workers = 4, .shadow_period = 3});
    EXPECT_GT(r.summary.shadow_count, 0u);
    EXPECT_EQ(r.summary.violations, 0u);
}
