#pragma once

// Truncated p-adic numbers with per-value precision tracking, and the
// profinite domains X_d = lim Z/dp^N.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <ranges>
#include <string>
#include <utility>

#include "bigrational.hpp"

namespace qvolk {

inline constexpr int default_padic_precision = 32;

namespace detail {

/// p^k, memoised per thread.
inline const BigInt& prime_power(unsigned long p, long k) {
    thread_local std::map<std::pair<unsigned long, long>, BigInt> cache;
    auto [it, inserted] = cache.try_emplace({p, k});
    if (inserted) mpz_ui_pow_ui(it->second.get_mpz_t(), p, static_cast<unsigned long>(k));
    return it->second;
}

inline void check_odd_prime(std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw precondition_error("p must be an odd prime, got " + std::to_string(p));
}

} // namespace detail

/// p-adic valuation; `lower_bound` marks a value only known to be 0 modulo p^value.
struct Valuation {
    long value;
    bool lower_bound;

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// x = p^v * u with u a unit known modulo p^r (r = relative precision), so x is
/// known modulo p^(v + r). A value indistinguishable from 0 is "zero at
/// precision": all that is known is x = 0 mod p^v.
class PadicNumber {
public:
    PadicNumber() = default;

    static PadicNumber from_rational(const BigRational& r, unsigned long p,
                                     int precision = default_padic_precision) {
        detail::check_odd_prime(p);
        if (precision < 1) throw precondition_error("p-adic precision must be positive");
        if (r == 0) return zero(p, precision);
        BigInt num = r.get_num(), den = r.get_den();
        BigInt pz = p, unum, uden;
        long vn = static_cast<long>(mpz_remove(unum.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()));
        long vd = static_cast<long>(mpz_remove(uden.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()));
        const BigInt& mod = detail::prime_power(p, precision);
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), uden.get_mpz_t(), mod.get_mpz_t());
        BigInt u = unum * inv;
        mpz_mod(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
        return PadicNumber(p, vn - vd, std::move(u), precision);
    }

    /// 0 modulo p^absolute_precision.
    static PadicNumber zero(unsigned long p, long absolute_precision) {
        PadicNumber z;
        z.p_ = p;
        z.v_ = absolute_precision;
        z.rel_ = 0;
        z.unit_ = 0;
        return z;
    }

    /// Reconstructs a value from its serialised parts.
    static PadicNumber from_parts(unsigned long p, long v, const BigInt& unit, int relative_precision) {
        detail::check_odd_prime(p);
        if (relative_precision <= 0) return zero(p, v);
        if (mpz_divisible_ui_p(unit.get_mpz_t(), p))
            throw precondition_error("p-adic unit part divisible by p");
        BigInt u = unit;
        mpz_mod(u.get_mpz_t(), u.get_mpz_t(), detail::prime_power(p, relative_precision).get_mpz_t());
        return PadicNumber(p, v, std::move(u), relative_precision);
    }

    unsigned long prime() const { return p_; }
    bool is_zero() const { return rel_ == 0; }
    /// Exponent of the modulus the unit is known to (0 for zero-at-precision).
    int relative_precision() const { return rel_; }
    long absolute_precision() const { return v_ + rel_; }
    const BigInt& unit() const { return unit_; }

    Valuation valuation() const { return {v_, is_zero()}; }

    /// Representative in Q: p^v * unit (0 for zero-at-precision).
    BigRational to_rational() const {
        if (is_zero()) return 0;
        if (v_ >= 0) return BigRational(unit_ * detail::prime_power(p_, v_));
        return make_rational(unit_, detail::prime_power(p_, -v_));
    }

    PadicNumber inverse() const {
        if (is_zero()) throw precondition_error("p-adic division by zero-at-precision");
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), detail::prime_power(p_, rel_).get_mpz_t());
        return PadicNumber(p_, -v_, std::move(inv), rel_);
    }

    PadicNumber pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        // x^0 = 1 exactly, even for zero-at-precision x.
        PadicNumber r = from_rational(1, p_, static_cast<int>(std::max<long>({rel_, absolute_precision(), 1})));
        if (e == 0) return r;
        PadicNumber b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    friend PadicNumber operator-(const PadicNumber& a) {
        if (a.is_zero()) return a;
        BigInt u = detail::prime_power(a.p_, a.rel_) - a.unit_;
        return PadicNumber(a.p_, a.v_, std::move(u), a.rel_);
    }

    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
        check_prime(a, b);
        const long abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
        if (a.is_zero() || b.is_zero()) {
            const PadicNumber& x = a.is_zero() ? b : a;
            if (x.is_zero() || x.v_ >= abs_prec) return zero(a.p_, abs_prec);
            return x.truncated(abs_prec);
        }
        const long v0 = std::min(a.v_, b.v_);
        if (v0 >= abs_prec) return zero(a.p_, abs_prec);
        const BigInt& mod = detail::prime_power(a.p_, abs_prec - v0);
        BigInt s = a.unit_ * detail::prime_power(a.p_, a.v_ - v0) + b.unit_ * detail::prime_power(a.p_, b.v_ - v0);
        mpz_mod(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
        if (s == 0) return zero(a.p_, abs_prec);
        BigInt pz = a.p_, u;
        long k = static_cast<long>(mpz_remove(u.get_mpz_t(), s.get_mpz_t(), pz.get_mpz_t()));
        return PadicNumber(a.p_, v0 + k, std::move(u), static_cast<int>(abs_prec - v0 - k));
    }

    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
        check_prime(a, b);
        if (a.is_zero() && b.is_zero()) return zero(a.p_, a.v_ + b.v_);
        if (a.is_zero()) return zero(a.p_, a.v_ + b.v_);
        if (b.is_zero()) return zero(a.p_, a.v_ + b.v_);
        const int rel = std::min(a.rel_, b.rel_);
        BigInt u = a.unit_ * b.unit_;
        mpz_mod(u.get_mpz_t(), u.get_mpz_t(), detail::prime_power(a.p_, rel).get_mpz_t());
        return PadicNumber(a.p_, a.v_ + b.v_, std::move(u), rel);
    }

    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
        check_prime(a, b);
        if (b.is_zero()) throw precondition_error("p-adic division by zero-at-precision");
        if (a.is_zero()) return zero(a.p_, a.v_ - b.v_);
        return a * b.inverse();
    }

    /// Exact representation equality (same digits, same precision).
    friend bool operator==(const PadicNumber& a, const PadicNumber& b) {
        return a.p_ == b.p_ && a.v_ == b.v_ && a.rel_ == b.rel_ && a.unit_ == b.unit_;
    }

    /// Same value known to `abs_prec` digits (requires that much precision).
    PadicNumber truncated(long abs_prec) const {
        if (abs_prec > absolute_precision()) throw precondition_error("cannot raise p-adic precision");
        if (is_zero() || v_ >= abs_prec) return zero(p_, abs_prec);
        const int rel = static_cast<int>(abs_prec - v_);
        BigInt u = unit_;
        mpz_mod(u.get_mpz_t(), u.get_mpz_t(), detail::prime_power(p_, rel).get_mpz_t());
        return PadicNumber(p_, v_, std::move(u), rel);
    }

    std::string to_string() const {
        if (is_zero()) return "O(" + std::to_string(p_) + "^" + std::to_string(v_) + ")";
        return std::to_string(p_) + "^" + std::to_string(v_) + "*" + qvolk::to_string(unit_) + " + O(" +
               std::to_string(p_) + "^" + std::to_string(absolute_precision()) + ")";
    }

private:
    PadicNumber(unsigned long p, long v, BigInt unit, int rel)
        : p_(p), v_(v), rel_(rel), unit_(std::move(unit)) {}

    static void check_prime(const PadicNumber& a, const PadicNumber& b) {
        if (a.p_ != b.p_)
            throw precondition_error("p-adic prime mismatch: " + std::to_string(a.p_) + " vs " +
                                     std::to_string(b.p_));
    }

    unsigned long p_ = 3;
    long v_ = 0;
    int rel_ = 0;
    BigInt unit_ = 0;
};

inline bool is_zero(const PadicNumber& x) { return x.is_zero(); }

inline PadicNumber padic_from_rational(const BigRational& r, unsigned long p,
                                       int precision = default_padic_precision) {
    return PadicNumber::from_rational(r, p, precision);
}

inline Valuation padic_valuation(const PadicNumber& x) { return x.valuation(); }

/// v_p(a - b) >= k, certified (a zero-at-precision difference only counts
/// when its bound reaches k).
inline bool padic_agree(const PadicNumber& a, const PadicNumber& b, long k) {
    return (a - b).valuation().value >= k;
}

/// |q - 1|_p < p^(-1/(p-1)); for odd p this is v_p(q - 1) >= 1.
inline bool q_admissible(const PadicNumber& q) {
    PadicNumber one = PadicNumber::from_rational(1, q.prime(), std::max(q.relative_precision(), 1));
    return (q - one).valuation().value >= 1;
}

/// X_d with (d, p) = 1; d = 1 is Z_p.
struct ProfiniteDomain {
    ProfiniteDomain(std::uint64_t prime, std::int64_t d_) : p(prime), d(d_) {
        detail::check_odd_prime(p);
        if (d < 1) throw precondition_error("domain index d must be positive");
        if (d % static_cast<std::int64_t>(p) == 0)
            throw precondition_error("domain requires gcd(d, p) = 1");
    }

    std::uint64_t p;
    std::int64_t d;

    friend bool operator==(const ProfiniteDomain&, const ProfiniteDomain&) = default;
};

inline constexpr std::int64_t default_ball_cap = 10'000'000;

/// Budget for d*p^N; QVOLK_BALL_CAP overrides the default.
inline std::int64_t ball_cap() {
    if (const char* env = std::getenv("QVOLK_BALL_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return default_ball_cap;
}

/// d * p^N, checked against the cap.
inline std::int64_t ball_count(const ProfiniteDomain& domain, int level, std::int64_t cap = ball_cap()) {
    if (level < 0) throw precondition_error("level N must be nonnegative");
    std::int64_t n = domain.d;
    for (int i = 0; i < level; ++i) {
        if (__builtin_mul_overflow(n, static_cast<std::int64_t>(domain.p), &n) || n > cap)
            throw budget_error("d*p^N exceeds the ball budget of " + std::to_string(cap));
    }
    if (n > cap) throw budget_error("d*p^N exceeds the ball budget of " + std::to_string(cap));
    return n;
}

/// 0, 1, ..., d*p^N - 1; a stands for the ball a + d p^N Z_p.
inline auto ball_representatives(const ProfiniteDomain& domain, int level, std::int64_t cap = ball_cap()) {
    if (level < 1) throw precondition_error("level N must be at least 1");
    return std::views::iota(std::int64_t{0}, ball_count(domain, level, cap));
}

} // namespace qvolk
