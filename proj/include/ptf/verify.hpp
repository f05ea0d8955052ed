#pragma once

// Sign-representation checks. margin_j = f(j) * p(j); with integer coefficients a PTF
// is valid exactly when every margin is >= 1.

#include "ptf/boolfn.hpp"
#include "ptf/common.hpp"
#include "ptf/ptf.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace ptf {

struct VerificationReport {
    bool matches = false;
    std::vector<BigInt> margins;
    BigInt min_margin;
};

/// diag(f) * H_n * w through the Walsh butterfly on the dense coefficient vector.
inline std::vector<BigInt> margins_by_transform(const BooleanFunction& f, const Ptf& p) {
    if (f.n() != p.n()) throw InvalidInput("verify: variable counts differ");
    auto w = p.dense();
    fwht_inplace(std::span<BigInt>(w));
    for (std::size_t j = 0; j < w.size(); ++j)
        if (f[j] < 0) w[j] = -w[j];
    return w;
}

/// Evaluates p term by term at each assignment.
inline std::vector<BigInt> margins_by_evaluation(const BooleanFunction& f, const Ptf& p) {
    if (f.n() != p.n()) throw InvalidInput("verify: variable counts differ");
    std::vector<BigInt> out(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
        out[j] = p.evaluate(j);
        if (f[j] < 0) out[j] = -out[j];
    }
    return out;
}

inline VerificationReport make_report(std::vector<BigInt> margins) {
    VerificationReport rep;
    rep.margins = std::move(margins);
    if (rep.margins.empty()) return rep;
    rep.min_margin = *std::min_element(rep.margins.begin(), rep.margins.end());
    rep.matches = rep.min_margin >= 1;
    return rep;
}

/// Runs both evaluation paths; they must agree.
inline VerificationReport verify_ptf(const BooleanFunction& f, const Ptf& p) {
    auto fast = margins_by_transform(f, p);
    if (fast != margins_by_evaluation(f, p))
        throw VerificationFailure("transform and direct evaluation disagree");
    return make_report(std::move(fast));
}

}  // namespace ptf
