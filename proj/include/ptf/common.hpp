#pragma once

#include <gmpxx.h>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ptf {

using BigInt = mpz_class;

inline constexpr int kMaxVars = 20;

/// Raised for malformed inputs (bad truth tables, mismatched sizes, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a request exceeds a size guard (n too large for an operation).
class SizeGuard : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Raised when an internal self-check fails. Never expected; signals a bug.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline int parity(std::uint64_t x) noexcept { return std::popcount(x) & 1; }

/// (-1)^popcount(a & b)
inline int hadamard_sign(std::uint64_t a, std::uint64_t b) noexcept {
    return parity(a & b) ? -1 : 1;
}

inline BigInt pow2(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline BigInt ipow(unsigned long base, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

/// Smallest s with s*s >= x (x >= 0).
inline BigInt ceil_sqrt(const BigInt& x) {
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), x.get_mpz_t());
    if (s * s < x) ++s;
    return s;
}

/// ceil(a / b) for a >= 0, b > 0.
inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

inline BigInt from_decimal(const std::string& s) {
    BigInt r;
    if (s.empty() || r.set_str(s, 10) != 0) throw InvalidInput("not a decimal integer: '" + s + "'");
    return r;
}

}  // namespace ptf
