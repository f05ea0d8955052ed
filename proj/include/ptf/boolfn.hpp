#pragma once

// Boolean functions as +-1 truth vectors.
//
// Conventions (shared by every module):
//   * assignment index j in [0, 2^n): variable x_k (1-based) = (-1)^bit_{k-1}(j)
//   * monomial mask M in [0, 2^n): prod of x_k with bit_{k-1}(M) set; M = 0 is the constant
//   * H_n[j][M] = (-1)^popcount(j & M), so p(assignment j) = sum_M H_n[j][M] * w_M
//   * the upper half of a truth vector (bit_{n-1}(j) = 0) is the x_n = +1 half

#include "ptf/common.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ptf {

class BooleanFunction {
public:
    BooleanFunction() = default;

    BooleanFunction(int n, std::vector<std::int8_t> values) : n_(n), values_(std::move(values)) {
        if (n < 0 || n > kMaxVars) throw InvalidInput("variable count out of range: " + std::to_string(n));
        if (values_.size() != (std::size_t{1} << n)) throw InvalidInput("truth vector length must be 2^n");
        for (auto v : values_)
            if (v != 1 && v != -1) throw InvalidInput("truth vector entries must be +1 or -1");
    }

    static BooleanFunction constant(int n, int sign = 1) {
        return BooleanFunction(n, std::vector<std::int8_t>(std::size_t{1} << n, static_cast<std::int8_t>(sign)));
    }

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return values_.size(); }
    int operator[](std::size_t j) const noexcept { return values_[j]; }
    std::span<const std::int8_t> values() const noexcept { return values_; }

    friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

private:
    int n_ = 0;
    std::vector<std::int8_t> values_;
};

/// omega = H_n * f. The spectrum proper is omega * 2^-n; it is never materialized as floats.
struct WalshSpectrum {
    int n = 0;
    std::vector<std::int64_t> omega;

    int scale_log2() const noexcept { return n; }
    std::size_t zero_count() const {
        return static_cast<std::size_t>(std::count(omega.begin(), omega.end(), 0));
    }
    friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;
};

struct Classification {
    bool is_bent = false;
    bool is_semibent = false;
    std::size_t sparsity_m = 0;
    int majority_sign = 1;
};

enum class TableFormat { binary, hex };

namespace detail {

inline int log2_exact(std::size_t len) {
    if (len == 0 || !std::has_single_bit(len)) return -1;
    return std::countr_zero(len);
}

inline int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace detail

/// Position j of the text (leftmost is j = 0; MSB first within a hex digit) holding bit b
/// becomes values[j] = (-1)^b.
inline BooleanFunction parse_truth_table(std::string_view text, TableFormat format) {
    std::vector<std::int8_t> values;
    if (format == TableFormat::binary) {
        const int n = detail::log2_exact(text.size());
        if (n < 1) throw InvalidInput("binary truth table length must be a power of two >= 2");
        if (n > kMaxVars) throw SizeGuard("truth table exceeds 2^20 entries");
        values.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1') throw InvalidInput(std::string("invalid binary character '") + c + "'");
            values.push_back(c == '0' ? 1 : -1);
        }
        return BooleanFunction(n, std::move(values));
    }
    const int digits_log = detail::log2_exact(text.size());
    if (digits_log < 0) throw InvalidInput("hex truth table length must be a power of two");
    const int n = digits_log + 2;
    if (n > kMaxVars) throw SizeGuard("truth table exceeds 2^20 entries");
    values.reserve(text.size() * 4);
    for (char c : text) {
        const int d = detail::hex_value(c);
        if (d < 0) throw InvalidInput(std::string("invalid hex character '") + c + "'");
        for (int b = 3; b >= 0; --b) values.push_back(((d >> b) & 1) ? -1 : 1);
    }
    return BooleanFunction(n, std::move(values));
}

inline std::string format_truth_table(const BooleanFunction& f, TableFormat format) {
    std::string out;
    if (format == TableFormat::binary) {
        out.reserve(f.size());
        for (std::size_t j = 0; j < f.size(); ++j) out.push_back(f[j] < 0 ? '1' : '0');
        return out;
    }
    if (f.n() < 2) throw InvalidInput("hex format requires n >= 2");
    static constexpr char kDigits[] = "0123456789abcdef";
    out.reserve(f.size() / 4);
    for (std::size_t j = 0; j < f.size(); j += 4) {
        int d = 0;
        for (std::size_t b = 0; b < 4; ++b) d = (d << 1) | (f[j + b] < 0 ? 1 : 0);
        out.push_back(kDigits[d]);
    }
    return out;
}

inline int hadamard_entry(std::uint64_t i, std::uint64_t j, int n) {
    if (n < 0 || n > 62) throw InvalidInput("Hadamard order out of range");
    const std::uint64_t size = std::uint64_t{1} << n;
    if (i >= size || j >= size) throw InvalidInput("Hadamard index out of range");
    return hadamard_sign(i, j);
}

/// In-place unnormalized Walsh-Hadamard butterfly; works for any ring with + and -.
template <typename T>
void fwht_inplace(std::span<T> a) {
    const std::size_t len = a.size();
    for (std::size_t h = 1; h < len; h <<= 1) {
        for (std::size_t i = 0; i < len; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                T x = a[j];
                T y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
        }
    }
}

inline WalshSpectrum walsh_spectrum(const BooleanFunction& f) {
    WalshSpectrum s{f.n(), std::vector<std::int64_t>(f.values().begin(), f.values().end())};
    fwht_inplace(std::span<std::int64_t>(s.omega));
    return s;
}

inline Classification classify(const BooleanFunction& f) {
    Classification c;
    const auto spec = walsh_spectrum(f);
    const int n = f.n();
    if (n % 2 == 0) {
        const std::int64_t mag = std::int64_t{1} << (n / 2);
        c.is_bent = std::all_of(spec.omega.begin(), spec.omega.end(),
                                [&](std::int64_t w) { return w == mag || w == -mag; });
    } else {
        const std::int64_t mag = std::int64_t{1} << ((n + 1) / 2);
        c.is_semibent = std::all_of(spec.omega.begin(), spec.omega.end(),
                                    [&](std::int64_t w) { return w == 0 || w == mag || w == -mag; });
    }
    const auto minus = static_cast<std::size_t>(std::count(f.values().begin(), f.values().end(), -1));
    const auto plus = f.size() - minus;
    c.sparsity_m = std::min(plus, minus);
    c.majority_sign = plus >= minus ? 1 : -1;
    return c;
}

/// Split on x_n: (x_n = +1 half, x_n = -1 half), each keeping the order of the low n-1 bits.
inline std::pair<BooleanFunction, BooleanFunction> restrict_halves(const BooleanFunction& f) {
    if (f.n() < 1) throw InvalidInput("restrict_halves requires n >= 1");
    const std::size_t half = f.size() / 2;
    auto vals = f.values();
    std::vector<std::int8_t> up(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<std::int8_t> lo(vals.begin() + static_cast<std::ptrdiff_t>(half), vals.end());
    return {BooleanFunction(f.n() - 1, std::move(up)), BooleanFunction(f.n() - 1, std::move(lo))};
}

}  // namespace ptf
