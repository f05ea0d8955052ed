#pragma once

#include "ptf/boolfn.hpp"
#include "ptf/common.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace ptf {

struct Term {
    std::uint64_t mask = 0;
    BigInt coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Integer-coefficient multilinear polynomial over +-1 variables; terms sorted by mask,
/// no zero coefficients.
class Ptf {
public:
    Ptf() = default;

    Ptf(int n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {
        if (n < 0 || n > kMaxVars) throw InvalidInput("Ptf: variable count out of range");
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mask < b.mask; });
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].mask >= limit) throw InvalidInput("Ptf: monomial mask out of range");
            if (terms_[i].coeff == 0) throw InvalidInput("Ptf: zero coefficient stored");
            if (i > 0 && terms_[i].mask == terms_[i - 1].mask) throw InvalidInput("Ptf: duplicate monomial mask");
        }
    }

    /// Drops zero entries of a dense coefficient vector of length 2^n.
    static Ptf from_dense(int n, std::span<const BigInt> w) {
        if (w.size() != (std::size_t{1} << n)) throw InvalidInput("Ptf: dense vector length must be 2^n");
        std::vector<Term> terms;
        for (std::size_t m = 0; m < w.size(); ++m)
            if (w[m] != 0) terms.push_back({m, w[m]});
        return Ptf(n, std::move(terms));
    }

    int n() const noexcept { return n_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t density() const noexcept { return terms_.size(); }

    BigInt weight() const {
        BigInt w = 0;
        for (const auto& t : terms_) w += abs(t.coeff);
        return w;
    }

    BigInt max_abs_coeff() const {
        BigInt best = 0;
        for (const auto& t : terms_)
            if (abs(t.coeff) > best) best = abs(t.coeff);
        return best;
    }

    std::vector<BigInt> dense() const {
        std::vector<BigInt> w(std::size_t{1} << n_);
        for (const auto& t : terms_) w[t.mask] = t.coeff;
        return w;
    }

    /// p(assignment j) = sum_M (-1)^popcount(j & M) * w_M
    BigInt evaluate(std::uint64_t assignment) const {
        BigInt acc = 0;
        for (const auto& t : terms_) {
            if (parity(assignment & t.mask))
                acc -= t.coeff;
            else
                acc += t.coeff;
        }
        return acc;
    }

    friend bool operator==(const Ptf&, const Ptf&) = default;

private:
    int n_ = 0;
    std::vector<Term> terms_;
};

/// w = [u; v]: mask m < 2^(n-1) takes u[m], mask m + 2^(n-1) takes v[m].
inline Ptf assemble_w(std::span<const BigInt> u, std::span<const BigInt> v) {
    if (u.size() != v.size()) throw InvalidInput("assemble_w: u and v lengths differ");
    if (u.empty() || !std::has_single_bit(u.size())) throw InvalidInput("assemble_w: length must be a power of two");
    const int n = std::countr_zero(u.size()) + 1;
    const std::size_t half = u.size();
    std::vector<Term> terms;
    for (std::size_t m = 0; m < half; ++m)
        if (u[m] != 0) terms.push_back({m, u[m]});
    for (std::size_t m = 0; m < half; ++m)
        if (v[m] != 0) terms.push_back({m + half, v[m]});
    return Ptf(n, std::move(terms));
}

}  // namespace ptf
