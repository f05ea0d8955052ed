#pragma once

#include "ptf/bent.hpp"
#include "ptf/boolfn.hpp"
#include "ptf/common.hpp"
#include "ptf/lp.hpp"
#include "ptf/matrix.hpp"
#include "ptf/sparse.hpp"
#include "ptf/synth.hpp"
#include "ptf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace ptf {

inline constexpr int kMaxOracleVars = 4;

// ---------------------------------------------------------------------------
// minimal density oracle
// ---------------------------------------------------------------------------

/// diag(f) * H_n
inline Matrix<long> sign_system(const BooleanFunction& f) {
    Matrix<long> a(f.size(), f.size());
    for (std::size_t j = 0; j < f.size(); ++j)
        for (std::size_t mask = 0; mask < f.size(); ++mask) a(j, mask) = f[j] * hadamard_sign(j, mask);
    return a;
}

/// True iff some w supported on `support` satisfies diag(f) H_n w >= 1.
inline bool support_feasible(const Matrix<long>& system, const std::vector<std::size_t>& support) {
    const auto sub = system.select_columns(support);
    auto w = feasible_at_least_one(sub);
    if (!w) return false;
    for (std::size_t i = 0; i < sub.rows(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < sub.cols(); ++j) acc += Rational(sub(i, j)) * (*w)[j];
        if (acc < 1) throw VerificationFailure("LP witness fails the exact check");
    }
    return true;
}

/// Smallest k <= k_max such that a k-term sign representation exists; nullopt if none.
/// Supports are tried in size-lexicographic order.
inline std::optional<std::size_t> oracle_min_density(const BooleanFunction& f, std::size_t k_max) {
    if (f.n() > kMaxOracleVars) throw SizeGuard("oracle_min_density supports n <= 4");
    const auto system = sign_system(f);
    const std::size_t total = f.size();
    k_max = std::min(k_max, total);
    for (std::size_t k = 1; k <= k_max; ++k) {
        std::vector<std::size_t> support(k);
        for (std::size_t i = 0; i < k; ++i) support[i] = i;
        while (true) {
            if (support_feasible(system, support)) return k;
            // next combination
            std::size_t i = k;
            while (i > 0 && support[i - 1] == total - k + (i - 1)) --i;
            if (i == 0) break;
            ++support[i - 1];
            for (std::size_t j = i; j < k; ++j) support[j] = support[j - 1] + 1;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// sweeps
// ---------------------------------------------------------------------------

enum class Method { general, bent, sparse };

inline const char* to_string(Method m) {
    switch (m) {
        case Method::bent: return "bent";
        case Method::sparse: return "sparse";
        default: return "general";
    }
}

struct SweepRow {
    std::string tt_hex;
    int n = 0;
    std::size_t m = 0;
    std::size_t f_count = 0;
    std::size_t g_count = 0;
    Method method = Method::general;
    std::size_t density = 0;
    BigInt weight = 0;
    BigInt max_coeff = 0;
    bool verified = false;
    bool density_ok = false;
    bool weight_ok = false;
    bool coeff_ok = false;
    bool shadow_checked = false;
    bool shadow_ok = true;
    std::string error;

    bool passed() const noexcept { return verified && density_ok && weight_ok && coeff_ok && shadow_ok; }
};

struct SweepSummary {
    std::size_t rows = 0;
    std::size_t violations = 0;
    std::size_t max_density = 0;
    BigInt max_weight = 0;
    BigInt max_coeff = 0;
    std::size_t bent_count = 0;
    std::size_t sparse_count = 0;
    std::size_t general_count = 0;
    std::size_t shadow_count = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    SweepSummary summary;
};

struct SweepOptions {
    int n = 2;
    bool exhaustive = true;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    /// one in this many specialized instances is re-run through the general path
    std::uint64_t shadow_period = 100;
};

inline Method choose_method(const BooleanFunction& f, const Classification& cls) {
    if (cls.is_bent) return Method::bent;
    if (f.n() >= 2 && cls.sparsity_m <= quarter_size(f.n())) return Method::sparse;
    return Method::general;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline bool general_checks(const BooleanFunction& f, const Synthesis& s) {
    const auto& c = s.certificate;
    return c.all_ok() && s.ptf.density() <= three_quarters(f.n()) &&
           global_weight_bound_holds(s.ptf.weight(), f.n());
}

}  // namespace detail

/// Classifies, dispatches to the most specialized synthesizer, and records every bound check.
inline SweepRow evaluate_function(const BooleanFunction& f, bool shadow = false) {
    SweepRow row;
    row.n = f.n();
    row.tt_hex = format_truth_table(f, TableFormat::hex);
    try {
        const auto cls = classify(f);
        row.m = cls.sparsity_m;
        row.method = choose_method(f, cls);
        const std::size_t cap = three_quarters(f.n());
        const BigInt full = pow2(static_cast<unsigned long>(f.n()));
        const Synthesis* syn = nullptr;
        std::optional<Synthesis> held;
        std::optional<SparseSynthesis> sparse;
        switch (row.method) {
            case Method::bent: {
                held = synthesize_bent(f);
                syn = &*held;
                row.density_ok = syn->ptf.density() <= cap;
                row.coeff_ok = syn->certificate.max_abs_coeff <= full;
                row.weight_ok = 4 * syn->ptf.weight() <= 3 * full * full;
                break;
            }
            case Method::sparse: {
                sparse = synthesize_sparse(f);
                syn = &sparse->synthesis;
                row.density_ok = sparse->density_ok && sparse->structure_ok && syn->ptf.density() <= cap;
                row.coeff_ok = sparse->coeff_ok && syn->certificate.x_bound_ok && syn->certificate.w_bound_ok;
                row.weight_ok = sparse->weight_ok && global_weight_bound_holds(syn->ptf.weight(), f.n());
                break;
            }
            case Method::general: {
                held = synthesize_general(f);
                syn = &*held;
                const auto& c = syn->certificate;
                const std::size_t zeroed = std::max(c.f_count, c.g_count);
                row.density_ok = syn->ptf.density() <= cap && syn->ptf.density() + zeroed <= f.size();
                row.coeff_ok = c.x_bound_ok && c.w_bound_ok;
                row.weight_ok = global_weight_bound_holds(syn->ptf.weight(), f.n());
                break;
            }
        }
        const auto& cert = syn->certificate;
        row.f_count = cert.f_count;
        row.g_count = cert.g_count;
        row.density = syn->ptf.density();
        row.weight = syn->ptf.weight();
        row.max_coeff = cert.max_abs_coeff;
        row.verified = cert.verified;
        row.coeff_ok = row.coeff_ok && row.max_coeff <= bound_w(cert.f_count, cert.g_count, f.n());
        if (shadow && row.method != Method::general) {
            row.shadow_checked = true;
            row.shadow_ok = detail::general_checks(f, synthesize_general(f));
        }
    } catch (const std::exception& e) {
        row.verified = false;
        row.error = e.what();
    }
    return row;
}

inline BooleanFunction function_from_index(int n, std::uint64_t t) {
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::int8_t> values(size);
    for (std::size_t j = 0; j < size; ++j) values[j] = ((t >> (size - 1 - j)) & 1) ? -1 : 1;
    return BooleanFunction(n, std::move(values));
}

inline BooleanFunction random_function(int n, std::mt19937_64& rng) {
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::int8_t> values(size);
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < size; ++j) {
        if (j % 64 == 0) bits = rng();
        values[j] = (bits >> (j % 64)) & 1 ? -1 : 1;
    }
    return BooleanFunction(n, std::move(values));
}

inline SweepSummary summarize(const std::vector<SweepRow>& rows) {
    SweepSummary s;
    s.rows = rows.size();
    for (const auto& r : rows) {
        if (!r.passed()) ++s.violations;
        s.max_density = std::max(s.max_density, r.density);
        if (r.weight > s.max_weight) s.max_weight = r.weight;
        if (r.max_coeff > s.max_coeff) s.max_coeff = r.max_coeff;
        if (r.shadow_checked) ++s.shadow_count;
        switch (r.method) {
            case Method::bent: ++s.bent_count; break;
            case Method::sparse: ++s.sparse_count; break;
            default: ++s.general_count; break;
        }
    }
    return s;
}

/// Rows come back in function-id order (truth-table value for exhaustive sweeps,
/// draw order for samples) whatever the worker count.
inline SweepResult sweep(const SweepOptions& opt) {
    if (opt.n < 2) throw InvalidInput("sweep requires n >= 2");
    if (opt.exhaustive && opt.n > kMaxOracleVars) throw SizeGuard("exhaustive sweeps support n <= 4");
    if (!opt.exhaustive && opt.n > kMaxSynthVars) throw SizeGuard("sampled sweeps support n <= 12");

    std::size_t total = 0;
    std::vector<BooleanFunction> samples;
    if (opt.exhaustive) {
        total = std::size_t{1} << (std::size_t{1} << opt.n);
    } else {
        std::mt19937_64 rng(opt.seed);
        samples.reserve(opt.count);
        for (std::size_t i = 0; i < opt.count; ++i) samples.push_back(random_function(opt.n, rng));
        total = samples.size();
    }

    std::vector<SweepRow> rows(total);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < total; i = next++) {
            const BooleanFunction f = opt.exhaustive ? function_from_index(opt.n, i) : samples[i];
            const bool shadow =
                opt.shadow_period > 0 && detail::splitmix64(opt.seed ^ (i * 0x100000001b3ULL)) % opt.shadow_period == 0;
            rows[i] = evaluate_function(f, shadow);
        }
    };
    const unsigned workers = std::max(1u, opt.workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    SweepResult result{std::move(rows), {}};
    result.summary = summarize(result.rows);
    return result;
}

inline constexpr const char* kSweepCsvHeader =
    "tt_hex,n,m,f_count,g_count,method,density,weight,max_coeff,verified,density_ok,weight_ok,coeff_ok";

inline void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    auto flag = [](bool b) { return b ? "true" : "false"; };
    os << kSweepCsvHeader << '\n';
    for (const auto& r : rows) {
        os << r.tt_hex << ',' << r.n << ',' << r.m << ',' << r.f_count << ',' << r.g_count << ','
           << to_string(r.method) << ',' << r.density << ',' << to_decimal(r.weight) << ','
           << to_decimal(r.max_coeff) << ',' << flag(r.verified) << ',' << flag(r.density_ok) << ','
           << flag(r.weight_ok) << ',' << flag(r.coeff_ok && r.shadow_ok) << '\n';
    }
}

}  // namespace ptf
