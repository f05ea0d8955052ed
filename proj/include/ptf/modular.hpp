#pragma once

// Word-size modular elimination and p-adic lifting for large +-1 blocks.
//
// Every result leaving this header is exact: a pivot set is accepted only when its
// square submatrix is nonsingular mod p (hence over Z), and solutions are rebuilt
// by rational reconstruction under Hadamard bounds, then checked by the caller.

#include "ptf/common.hpp"
#include "ptf/exactint.hpp"
#include "ptf/matrix.hpp"

#include <cmath>
#include <cstdint>
#include <mutex>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace ptf::modular {

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for 32-bit inputs (bases 2, 7, 61).
inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u})
        if (n % q == 0) return n == q;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 7ull, 61ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// The index-th prime below 2^31, counting downward. Deterministic.
inline std::uint32_t prime_at(std::size_t index) {
    static std::vector<std::uint32_t> cache;
    // shared across sweep workers
    static std::mutex mu;
    std::lock_guard lock(mu);
    std::uint32_t candidate = cache.empty() ? (1u << 31) - 1 : cache.back() - 2;
    while (cache.size() <= index) {
        while (!is_prime_u32(candidate)) candidate -= 2;
        cache.push_back(candidate);
        candidate -= 2;
    }
    return cache[index];
}

/// Arithmetic mod a prime p < 2^31; products are reduced through a double estimate.
class Field {
public:
    explicit Field(std::uint32_t p) : p_(p), pinv_(1.0 / static_cast<double>(p)) {}

    std::uint64_t p() const noexcept { return p_; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return reduce(a * b); }

    /// x < 2^63
    std::uint64_t reduce(std::uint64_t x) const noexcept {
        auto q = static_cast<std::uint64_t>(static_cast<double>(x) * pinv_);
        auto r = static_cast<std::int64_t>(x - q * p_);
        while (r < 0) r += static_cast<std::int64_t>(p_);
        while (r >= static_cast<std::int64_t>(p_)) r -= static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(r);
    }

    std::uint64_t inv(std::uint64_t a) const { return powmod(a, p_ - 2, p_); }

    std::uint64_t from_signed(long long v) const noexcept {
        long long r = v % static_cast<long long>(p_);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p_) : r);
    }

    std::uint64_t from_big(const BigInt& v) const {
        return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_));
    }

private:
    std::uint64_t p_;
    double pinv_;
};

template <typename T>
std::vector<std::uint64_t> reduce_matrix(const Matrix<T>& a, const Field& fp) {
    std::vector<std::uint64_t> out(a.rows() * a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if constexpr (std::is_same_v<T, BigInt>)
                out[r * a.cols() + c] = fp.from_big(a(r, c));
            else
                out[r * a.cols() + c] = fp.from_signed(static_cast<long long>(a(r, c)));
        }
    return out;
}

/// PA = LU mod p for a square matrix.
class LuFactor {
public:
    template <typename T>
    LuFactor(const Matrix<T>& a, std::uint32_t prime) : field_(prime), size_(a.rows()), perm_(a.rows()) {
        if (!a.square()) throw InvalidInput("LU of a non-square matrix");
        lu_ = reduce_matrix(a, field_);
        diag_inv_.assign(size_, 0);
        for (std::size_t i = 0; i < size_; ++i) perm_[i] = i;
        const std::uint64_t p = field_.p();
        det_ = 1;
        for (std::size_t k = 0; k < size_; ++k) {
            std::size_t piv = k;
            while (piv < size_ && at(piv, k) == 0) ++piv;
            if (piv == size_) {
                singular_ = true;
                det_ = 0;
                return;
            }
            if (piv != k) {
                for (std::size_t c = 0; c < size_; ++c) std::swap(at(k, c), at(piv, c));
                std::swap(perm_[k], perm_[piv]);
                det_ = (p - det_) % p;
            }
            const std::uint64_t pivot = at(k, k);
            det_ = field_.mul(det_, pivot);
            const std::uint64_t pivot_inv = field_.inv(pivot);
            diag_inv_[k] = pivot_inv;
            for (std::size_t i = k + 1; i < size_; ++i) {
                if (at(i, k) == 0) continue;
                const std::uint64_t l = field_.mul(at(i, k), pivot_inv);
                at(i, k) = l;
                const std::uint64_t neg = p - l;
                std::uint64_t* ri = &lu_[i * size_];
                const std::uint64_t* rk = &lu_[k * size_];
                for (std::size_t j = k + 1; j < size_; ++j) ri[j] = field_.reduce(ri[j] + neg * rk[j]);
            }
        }
    }

    bool singular() const noexcept { return singular_; }
    std::uint64_t det() const noexcept { return det_; }
    const Field& field() const noexcept { return field_; }

    /// Solves A z = b mod p (b entries already reduced).
    std::vector<std::uint64_t> solve(const std::vector<std::uint64_t>& b) const {
        const std::uint64_t p = field_.p();
        std::vector<std::uint64_t> y(size_);
        for (std::size_t i = 0; i < size_; ++i) {
            std::uint64_t acc = b[perm_[i]];
            const std::uint64_t* row = &lu_[i * size_];
            for (std::size_t j = 0; j < i; ++j) acc = field_.reduce(acc + (p - row[j]) * y[j]);
            y[i] = acc;
        }
        for (std::size_t i = size_; i-- > 0;) {
            std::uint64_t acc = y[i];
            const std::uint64_t* row = &lu_[i * size_];
            for (std::size_t j = i + 1; j < size_; ++j) acc = field_.reduce(acc + (p - row[j]) * y[j]);
            y[i] = field_.mul(acc, diag_inv_[i]);
        }
        return y;
    }

private:
    std::uint64_t& at(std::size_t r, std::size_t c) { return lu_[r * size_ + c]; }

    Field field_;
    std::size_t size_;
    std::vector<std::uint64_t> lu_;
    std::vector<std::size_t> perm_;
    std::vector<std::uint64_t> diag_inv_;
    std::uint64_t det_ = 0;
    bool singular_ = false;
};

/// Greedy leftmost pivots of row echelon reduction mod p. Returns nullopt when the
/// rank mod p falls short of the row count.
template <typename T>
std::optional<PivotSelection> pivot_columns_mod(const Matrix<T>& m, std::uint32_t prime) {
    const Field fp(prime);
    const std::uint64_t p = fp.p();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    auto a = reduce_matrix(m, fp);
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * cols + c]; };
    PivotSelection sel;
    std::size_t k = 0;
    for (std::size_t col = 0; col < cols && k < rows; ++col) {
        std::size_t piv = k;
        while (piv < rows && at(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != k)
            for (std::size_t c = col; c < cols; ++c) std::swap(at(k, c), at(piv, c));
        const std::uint64_t inv = fp.inv(at(k, col));
        for (std::size_t i = k + 1; i < rows; ++i) {
            if (at(i, col) == 0) continue;
            const std::uint64_t neg = p - fp.mul(at(i, col), inv);
            std::uint64_t* ri = &a[i * cols];
            const std::uint64_t* rk = &a[k * cols];
            for (std::size_t j = col + 1; j < cols; ++j) ri[j] = fp.reduce(ri[j] + neg * rk[j]);
            ri[col] = 0;
        }
        sel.pivot_cols.push_back(col);
        ++k;
    }
    sel.rank = sel.pivot_cols.size();
    if (sel.rank != rows) return std::nullopt;
    return sel;
}

/// Finds a/b == t (mod modulus) with |a| <= num_bound, 0 < b <= den_bound (Wang's method).
inline std::optional<std::pair<BigInt, BigInt>> rational_reconstruct(const BigInt& t, const BigInt& modulus,
                                                                     const BigInt& num_bound,
                                                                     const BigInt& den_bound) {
    BigInt r0 = modulus;
    BigInt r1;
    mpz_mod(r1.get_mpz_t(), t.get_mpz_t(), modulus.get_mpz_t());
    BigInt s0 = 0;
    BigInt s1 = 1;
    BigInt q;
    BigInt tmp;
    while (r1 > num_bound) {
        mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
        tmp = r0 - q * r1;
        r0 = std::move(r1);
        r1 = std::move(tmp);
        tmp = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(tmp);
    }
    if (s1 == 0 || abs(s1) > den_bound) return std::nullopt;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
    if (g != 1) return std::nullopt;
    if (s1 < 0) {
        s1 = -s1;
        r1 = -r1;
    }
    return std::make_pair(r1, s1);
}

/// A^{-1} * 1 == numerators / denominator, plus det(A); all exact.
struct OnesSolution {
    BigInt det;
    std::vector<BigInt> numerators;
    BigInt denominator;
};

template <typename T>
BigInt squared_row_norm(const Matrix<T>& a, std::size_t r) {
    BigInt acc = 0;
    for (const auto& e : a.row(r)) {
        const BigInt v(e);
        acc += v * v;
    }
    return acc;
}

/// Solves A z = 1 over Q by p-adic (Dixon) lifting; det(A) by CRT on det / (denominator * 2^e),
/// where 2^e = 2^(m-2) divides that quotient for +-1 matrices. Throws if A is singular.
template <typename T>
OnesSolution solve_ones_padic(const Matrix<T>& a) {
    if (!a.square()) throw InvalidInput("solve_ones_padic needs a square matrix");
    const std::size_t size = a.rows();
    if (size == 0) return {1, {}, 1};

    BigInt det_bound_sq = 1;
    BigInt num_bound_sq = 1;
    for (std::size_t r = 0; r < size; ++r) {
        const BigInt norm = squared_row_norm(a, r);
        det_bound_sq *= norm;
        num_bound_sq *= norm + 1;
    }
    const BigInt det_bound = ceil_sqrt(det_bound_sq);
    const BigInt num_bound = ceil_sqrt(num_bound_sq);

    std::size_t prime_index = 0;
    std::optional<LuFactor> lu;
    for (; prime_index < 64; ++prime_index) {
        lu.emplace(a, prime_at(prime_index));
        if (!lu->singular()) break;
        // Nonsingular over Q implies nonsingular for all but finitely many primes; test exactly.
        if (prime_index == 0 && bareiss_det(a) == 0) throw InvalidInput("solve_ones_padic: singular matrix");
    }
    if (lu->singular()) throw InvalidInput("solve_ones_padic: no usable prime");
    const Field& fp = lu->field();
    const std::uint64_t p = fp.p();

    const BigInt target = 2 * num_bound * det_bound;
    std::size_t steps = 0;
    BigInt modulus = 1;
    while (modulus <= target) {
        modulus *= static_cast<unsigned long>(p);
        ++steps;
    }

    std::vector<long long> residual(size, 1);
    std::vector<std::vector<std::uint64_t>> digits;
    digits.reserve(steps);
    std::vector<std::uint64_t> rhs(size);
    for (std::size_t step = 0; step < steps; ++step) {
        for (std::size_t i = 0; i < size; ++i) rhs[i] = fp.from_signed(residual[i]);
        auto z = lu->solve(rhs);
        for (std::size_t i = 0; i < size; ++i) {
            long long acc = residual[i];
            for (std::size_t j = 0; j < size; ++j)
                acc -= static_cast<long long>(a(i, j)) * static_cast<long long>(z[j]);
            if (acc % static_cast<long long>(p) != 0) throw VerificationFailure("p-adic lifting lost exactness");
            residual[i] = acc / static_cast<long long>(p);
        }
        digits.push_back(std::move(z));
    }

    OnesSolution out;
    out.numerators.resize(size);
    BigInt den = 1;
    BigInt half = modulus / 2;
    for (std::size_t j = 0; j < size; ++j) {
        BigInt value = 0;
        for (std::size_t step = steps; step-- > 0;) {
            value *= static_cast<unsigned long>(p);
            value += static_cast<unsigned long>(digits[step][j]);
        }
        BigInt t = den * value;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), modulus.get_mpz_t());
        if (t > half) t -= modulus;
        if (abs(t) <= num_bound) {
            out.numerators[j] = t;
            continue;
        }
        auto rat = rational_reconstruct(value, modulus, num_bound, det_bound);
        if (!rat) throw VerificationFailure("rational reconstruction failed");
        const auto& [num, d] = *rat;
        BigInt g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        const BigInt grow = d / g;
        for (std::size_t i = 0; i < j; ++i) out.numerators[i] *= grow;
        den *= grow;
        out.numerators[j] = num * (den / d);
    }
    out.denominator = den;

    // det = den * 2^e * k
    const unsigned long two_exp = (is_sign_matrix(a) && size >= 2) ? size - 2 : 0;
    const BigInt scale = den * pow2(two_exp);
    const BigInt k_bound = ceil_div(det_bound, scale);
    BigInt k_residue = 0;
    BigInt k_modulus = 1;
    auto absorb = [&](std::uint64_t det_mod, const Field& f) {
        const std::uint64_t s = f.from_big(scale);
        if (s == 0) return;
        const std::uint64_t km = f.mul(det_mod, f.inv(s));
        // CRT: k = k_residue (mod k_modulus), k = km (mod q)
        const auto q = static_cast<unsigned long>(f.p());
        const std::uint64_t cur = f.from_big(k_residue);
        const std::uint64_t mod_inv = f.inv(f.from_big(k_modulus));
        const std::uint64_t h = f.mul((km + f.p() - cur) % f.p(), mod_inv);
        k_residue += k_modulus * static_cast<unsigned long>(h);
        k_modulus *= q;
    };
    absorb(lu->det(), fp);
    std::size_t extra = prime_index + 1;
    while (k_modulus <= 2 * k_bound) {
        LuFactor other(a, prime_at(extra++));
        absorb(other.det(), other.field());
    }
    if (k_residue > k_modulus / 2) k_residue -= k_modulus;
    out.det = scale * k_residue;
    if (out.det == 0) throw VerificationFailure("p-adic determinant vanished for a nonsingular matrix");
    return out;
}

}  // namespace ptf::modular
