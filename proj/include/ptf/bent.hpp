#pragma once

// Bent functions: the two x_n halves are semi-bent, so the stacked row sums
// 1^T [F; G] and 1^T [F; -G] each vanish on 2^(n-2) columns. Choosing
// a = a' = 1/2, c = 1/2, c' = 3/2 gives the integer solution
//   u = 1^T [F; G],  v = 2 * 1^T G
// with every coefficient bounded by 2^n and no pivot search at all.

#include "ptf/boolfn.hpp"
#include "ptf/common.hpp"
#include "ptf/decompose.hpp"
#include "ptf/ptf.hpp"
#include "ptf/synth.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace ptf {

inline constexpr int kMaxBentVars = 16;

class NotBent : public InvalidInput {
public:
    NotBent() : InvalidInput("input is not a bent function") {}
};

struct BentDecomposition {
    BooleanFunction f_p;
    BooleanFunction f_q;
    WalshSpectrum omega_p;
    WalshSpectrum omega_q;
};

inline bool is_bent(const BooleanFunction& f) { return f.n() >= 1 && classify(f).is_bent; }

/// f_p = x_n = +1 half, f_q = x_n = -1 half; H f_p = (u+v)/2 and H f_q = (u-v)/2
/// where [u; v] is the Walsh spectrum of f.
inline BentDecomposition decompose_bent(const BooleanFunction& f) {
    if (!is_bent(f)) throw NotBent();
    auto [up, lo] = restrict_halves(f);
    BentDecomposition d{up, lo, walsh_spectrum(up), walsh_spectrum(lo)};

    const auto whole = walsh_spectrum(f);
    const std::size_t half = up.size();
    for (std::size_t i = 0; i < half; ++i) {
        const std::int64_t u = whole.omega[i];
        const std::int64_t v = whole.omega[i + half];
        if (2 * d.omega_p.omega[i] != u + v || 2 * d.omega_q.omega[i] != u - v)
            throw VerificationFailure("half-spectrum identity violated");
    }
    if (!classify(d.f_p).is_semibent || !classify(d.f_q).is_semibent)
        throw VerificationFailure("bent halves are not semi-bent");
    return d;
}

enum class BentVariant {
    plus,   // u = 1^T [F; G]
    minus,  // u = 1^T [F; -G]
};

inline Synthesis synthesize_bent(const BooleanFunction& f, BentVariant variant = BentVariant::plus) {
    if (f.n() > kMaxBentVars) throw SizeGuard("synthesize_bent supports n <= 16");
    if (!is_bent(f)) throw NotBent();
    const int n = f.n();
    const FgDecomposition d = fg_decompose(f);
    const std::size_t half = d.half_size();

    const auto u_small = stack_row_sums(d, variant == BentVariant::plus ? 1 : -1);
    const auto v_small = signed_row_sum(d.g_rows, n - 1, 2);
    std::vector<BigInt> u(half);
    std::vector<BigInt> v(half);
    for (std::size_t c = 0; c < half; ++c) {
        u[c] = static_cast<long>(u_small[c]);
        v[c] = static_cast<long>(v_small[c]);
    }
    Ptf p = assemble_w(u, v);

    SynthesisCertificate cert;
    cert.method = "bent";
    cert.f_count = d.f_rows.size();
    cert.g_count = d.g_rows.size();
    cert.zeroed_half = Half::u;
    for (std::size_t c = 0; c < half; ++c)
        if (u_small[c] == 0) cert.pivot_cols.push_back(c);
    cert.r = 1;
    cert.max_abs_x = 0;
    cert.bound_x = 0;
    cert.bound_w = pow2(static_cast<unsigned long>(n));
    detail::finish_certificate(f, p, cert);
    cert.x_bound_ok = true;
    cert.w_bound_ok = cert.max_abs_coeff <= cert.bound_w;
    if (!cert.verified) throw VerificationFailure("bent synthesis does not sign-represent the input");
    return {std::move(p), std::move(cert)};
}

/// Maiorana-McFarland: with assignment index j = (y << n/2) | x,
/// f(j) = (-1)^(<x, perm[y]> xor offsets[y]). Bentness is checked, not assumed.
inline BooleanFunction generate_bent(int n, std::span<const std::uint32_t> permutation,
                                     std::span<const std::uint8_t> g_offsets) {
    if (n < 2 || n % 2 != 0) throw InvalidInput("generate_bent requires an even n >= 2");
    if (n > kMaxBentVars) throw SizeGuard("generate_bent supports n <= 16");
    const std::size_t side = std::size_t{1} << (n / 2);
    if (permutation.size() != side) throw InvalidInput("permutation must have 2^(n/2) entries");
    if (!g_offsets.empty() && g_offsets.size() != side) throw InvalidInput("offsets must have 2^(n/2) entries");
    std::vector<bool> seen(side, false);
    for (auto p : permutation) {
        if (p >= side || seen[p]) throw InvalidInput("permutation is not a bijection");
        seen[p] = true;
    }
    std::vector<std::int8_t> values(side * side);
    for (std::size_t y = 0; y < side; ++y) {
        const int offset = g_offsets.empty() ? 0 : (g_offsets[y] & 1);
        for (std::size_t x = 0; x < side; ++x) {
            const int bit = parity(x & permutation[y]) ^ offset;
            values[(y << (n / 2)) | x] = bit ? -1 : 1;
        }
    }
    BooleanFunction f(n, std::move(values));
    if (!is_bent(f)) throw VerificationFailure("generated function failed the bent check");
    return f;
}

}  // namespace ptf
