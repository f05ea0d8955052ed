#pragma once

// JSON schemas. Big integers are decimal strings.
//   Ptf: {"n": int, "terms": [{"mask": int, "coeff": "dec"}], "density": int, "weight": "dec"}

#include "ptf/audit.hpp"
#include "ptf/common.hpp"
#include "ptf/ptf.hpp"
#include "ptf/sparse.hpp"
#include "ptf/synth.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ptf {

using Json = nlohmann::ordered_json;

inline Json to_json(const Ptf& p) {
    Json terms = Json::array();
    for (const auto& t : p.terms()) terms.push_back({{"mask", t.mask}, {"coeff", to_decimal(t.coeff)}});
    return {{"n", p.n()}, {"terms", std::move(terms)}, {"density", p.density()}, {"weight", to_decimal(p.weight())}};
}

/// Accepts a bare Ptf object or a wrapper holding one under "ptf". density and weight,
/// when present, must match the terms.
inline Ptf ptf_from_json(const Json& j) {
    if (j.is_object() && j.contains("ptf")) return ptf_from_json(j.at("ptf"));
    try {
        const int n = j.at("n").get<int>();
        std::vector<Term> terms;
        for (const auto& t : j.at("terms")) {
            const auto& c = t.at("coeff");
            BigInt coeff = c.is_string() ? from_decimal(c.get<std::string>()) : BigInt(c.get<long>());
            terms.push_back({t.at("mask").get<std::uint64_t>(), std::move(coeff)});
        }
        Ptf p(n, std::move(terms));
        if (j.contains("density") && j.at("density").get<std::size_t>() != p.density())
            throw InvalidInput("Ptf JSON: density does not match terms");
        if (j.contains("weight") && from_decimal(j.at("weight").get<std::string>()) != p.weight())
            throw InvalidInput("Ptf JSON: weight does not match terms");
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed Ptf JSON: ") + e.what());
    }
}

inline Json big_array(const std::vector<BigInt>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_decimal(x));
    return a;
}

inline Json to_json(const SynthesisCertificate& c) {
    return {{"method", c.method},
            {"f_count", c.f_count},
            {"g_count", c.g_count},
            {"zeroed_half", to_string(c.zeroed_half)},
            {"pivot_cols", c.pivot_cols},
            {"r", to_decimal(c.r)},
            {"max_abs_x", to_decimal(c.max_abs_x)},
            {"bound_x", to_decimal(c.bound_x)},
            {"bound_w", to_decimal(c.bound_w)},
            {"max_abs_coeff", to_decimal(c.max_abs_coeff)},
            {"min_margin", to_decimal(c.min_margin)},
            {"margins", big_array(c.margins)},
            {"verified", c.verified},
            {"x_bound_ok", c.x_bound_ok},
            {"w_bound_ok", c.w_bound_ok}};
}

inline Json to_json(const SparseBounds& b) {
    return {{"n", b.n},
            {"m", b.m},
            {"density_bound", b.density_bound},
            {"coeff_bound", to_decimal(b.coeff_bound)},
            {"weight_bound", to_decimal(b.weight_bound)},
            {"applies", b.applies}};
}

inline Json to_json(const SparseSynthesis& s) {
    Json cert = to_json(s.synthesis.certificate);
    cert["sparse_bounds"] = to_json(s.bounds);
    cert["structure_ok"] = s.structure_ok;
    cert["density_ok"] = s.density_ok;
    cert["coeff_ok"] = s.coeff_ok;
    cert["weight_ok"] = s.weight_ok;
    return cert;
}

inline Json to_json(const SweepSummary& s) {
    return {{"rows", s.rows},
            {"violations", s.violations},
            {"max_density", s.max_density},
            {"max_weight", to_decimal(s.max_weight)},
            {"max_coeff", to_decimal(s.max_coeff)},
            {"bent", s.bent_count},
            {"sparse", s.sparse_count},
            {"general", s.general_count},
            {"shadow_checked", s.shadow_count}};
}

}  // namespace ptf
