#include "ptf/json_io.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ptf;

TEST(PtfJson, Schema) {
    const Ptf p(2, {{0, 2}, {2, 2}, {3, -2}});
    const Json j = to_json(p);
    EXPECT_EQ(j.dump(),
              R"({"n":2,"terms":[{"mask":0,"coeff":"2"},{"mask":2,"coeff":"2"},{"mask":3,"coeff":"-2"}],)"
              R"("density":3,"weight":"6"})");
}

TEST(PtfJson, RoundTripWithBigCoefficients) {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 20; ++t) {
        std::vector<Term> terms;
        for (std::uint64_t m = 0; m < 256; m += 1 + rng() % 9) {
            BigInt c = pow2(static_cast<unsigned long>(rng() % 200)) + static_cast<unsigned long>(rng() % 1000);
            if (rng() & 1) c = -c;
            terms.push_back({m, c});
        }
        const Ptf p(8, terms);
        EXPECT_EQ(ptf_from_json(Json::parse(to_json(p).dump())), p);
        EXPECT_EQ(ptf_from_json(Json{{"ptf", to_json(p)}}), p);
    }
}

TEST(PtfJson, RejectsInconsistentDocuments) {
    Json j = to_json(Ptf(2, {{0, 1}}));
    j["density"] = 2;
    EXPECT_THROW(ptf_from_json(j), InvalidInput);
    j = to_json(Ptf(2, {{0, 1}}));
    j["weight"] = "5";
    EXPECT_THROW(ptf_from_json(j), InvalidInput);
    EXPECT_THROW(ptf_from_json(Json{{"n", 2}}), InvalidInput);
    EXPECT_THROW(ptf_from_json(Json::parse(R"({"n":2,"terms":[{"mask":9,"coeff":"1"}]})")), InvalidInput);
    EXPECT_THROW(ptf_from_json(Json::parse(R"({"n":2,"terms":[{"mask":1,"coeff":"1x"}]})")), InvalidInput);
}

TEST(CertificateJson, CarriesBoundsAndMargins) {
    const auto s = synthesize_general(BooleanFunction::constant(3));
    const Json c = to_json(s.certificate);
    EXPECT_EQ(c.at("method"), "general");
    EXPECT_EQ(c.at("margins").size(), 8u);
    EXPECT_TRUE(c.at("verified").get<bool>());
    EXPECT_TRUE(c.at("bound_w").is_string());
}
