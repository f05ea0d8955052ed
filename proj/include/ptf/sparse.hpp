#pragma once

// m-sparse functions (m = size of the minority value set). Flipping x_n can only
// change f at a minority position, so #G <= m and #F >= 2^(n-1) - m. For
// m <= 2^(n-2) the general synthesizer then zeroes >= 2^(n-1) - m coefficients of v,
// and the solved G block has at most m rows, which sharpens both bounds.

#include "ptf/boolfn.hpp"
#include "ptf/common.hpp"
#include "ptf/synth.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace ptf {

struct SparseBounds {
    int n = 0;
    std::size_t m = 0;
    std::size_t density_bound = 0;  // 2^(n-1) + min(m, 2^(n-2))
    BigInt coeff_bound;             // ceil(2^(n + 0.5 m log m - m + 1.5 log m + 2))
    BigInt weight_bound;            // ceil(3 * 2^(2n + 0.5 m log m - m + 1.5 log m))
    bool applies = false;           // m <= 2^(n-2); otherwise only 0.75 * 2^n is certified
};

namespace detail {

/// ceil(factor * 2^(e - m) * m^((m+3)/2)), with m^(...) := 1 for m <= 1.
inline BigInt sparse_envelope(unsigned long factor, unsigned long e, std::size_t m) {
    if (m <= 1) {
        BigInt v = BigInt(factor) * pow2(e);
        return m == 1 ? ceil_div(v, 2) : v;
    }
    const BigInt pow_two = pow2(e);
    const BigInt radicand = BigInt(factor) * BigInt(factor) * pow_two * pow_two *
                            ipow(static_cast<unsigned long>(m), m + 3);
    return ceil_div(ceil_sqrt(radicand), pow2(m));
}

}  // namespace detail

inline std::size_t quarter_size(int n) { return n >= 2 ? std::size_t{1} << (n - 2) : 0; }

inline SparseBounds sparse_bounds(int n, std::size_t m) {
    if (n < 1 || n > kMaxVars) throw InvalidInput("sparse_bounds: n out of range");
    if (m > (std::size_t{1} << (n - 1))) throw InvalidInput("sparse_bounds: m exceeds 2^(n-1)");
    SparseBounds b;
    b.n = n;
    b.m = m;
    b.density_bound = (std::size_t{1} << (n - 1)) + std::min(m, quarter_size(n));
    const auto un = static_cast<unsigned long>(n);
    b.coeff_bound = detail::sparse_envelope(1, un + 2, m);
    b.weight_bound = detail::sparse_envelope(3, 2 * un, m);
    b.applies = m <= quarter_size(n);
    return b;
}

struct SparseSynthesis {
    Synthesis synthesis;
    SparseBounds bounds;
    bool structure_ok = false;  // #F >= 2^(n-1) - m
    bool density_ok = false;
    bool coeff_ok = false;
    bool weight_ok = false;

    bool all_ok() const noexcept {
        return synthesis.certificate.all_ok() && structure_ok && density_ok && coeff_ok && weight_ok;
    }
};

inline std::size_t three_quarters(int n) { return 3 * (std::size_t{1} << n) / 4; }

inline SparseSynthesis synthesize_sparse(const BooleanFunction& f) {
    const int n = f.n();
    const auto cls = classify(f);
    SparseSynthesis out{synthesize_general(f), sparse_bounds(n, cls.sparsity_m)};
    auto& cert = out.synthesis.certificate;
    cert.method = "sparse";
    const Ptf& p = out.synthesis.ptf;
    const std::size_t half = std::size_t{1} << (n - 1);
    out.structure_ok = cert.f_count + cls.sparsity_m >= half;
    if (out.bounds.applies) {
        out.density_ok = p.density() <= out.bounds.density_bound;
        out.coeff_ok = cert.max_abs_coeff <= out.bounds.coeff_bound;
        out.weight_ok = p.weight() <= out.bounds.weight_bound;
    } else {
        out.density_ok = p.density() <= three_quarters(n);
        out.coeff_ok = cert.w_bound_ok;
        out.weight_ok = global_weight_bound_holds(p.weight(), n);
    }
    return out;
}

/// Constant +1 with exactly m entries flipped to -1 (seeded partial Fisher-Yates on
/// raw mt19937_64 output, so the draw is identical across standard libraries).
inline BooleanFunction random_sparse(int n, std::size_t m, std::uint64_t seed) {
    if (n < 1 || n > kMaxVars) throw InvalidInput("random_sparse: n out of range");
    const std::size_t size = std::size_t{1} << n;
    if (m > size / 2) throw InvalidInput("random_sparse: m must be <= 2^(n-1)");
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<std::int8_t> values(size, 1);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (size - i));
        std::swap(idx[i], idx[j]);
        values[idx[i]] = -1;
    }
    return BooleanFunction(n, std::move(values));
}

}  // namespace ptf
