#pragma once

// Arbitrary precision integers and rationals (GMP) plus the handful of
// number-theoretic helpers shared by the rest of the library.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace qvolk {

using BigInt = mpz_class;
/// Always canonical: gcd(|num|, den) = 1 and den >= 1.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw precondition_error("rational with zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "a", "-a" or "a/b".
inline BigRational parse_rational(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    BigInt num, den = 1;
    auto parse_int = [&](const std::string& part, BigInt& out) {
        if (part.empty() || out.set_str(part, 10) != 0)
            throw precondition_error("malformed rational '" + s + "'");
    };
    if (slash == std::string::npos) {
        parse_int(s, num);
    } else {
        parse_int(s.substr(0, slash), num);
        parse_int(s.substr(slash + 1), den);
    }
    return make_rational(num, den);
}

/// "num/den", or just "num" when den = 1.
inline std::string to_string(const BigRational& r) { return r.get_str(10); }
inline std::string to_string(const BigInt& z) { return z.get_str(10); }

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt pow_ui(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Integer power, negative exponents allowed for nonzero base.
inline BigRational pow(const BigRational& base, long e) {
    if (e < 0) {
        if (base == 0) throw precondition_error("zero to a negative power");
        return pow(BigRational(1) / base, -e);
    }
    BigRational r(pow_ui(base.get_num(), static_cast<unsigned long>(e)),
                  pow_ui(base.get_den(), static_cast<unsigned long>(e)));
    return r;
}

/// v_p(z) for z != 0.
inline long valuation(const BigInt& z, unsigned long p) {
    if (z == 0) throw precondition_error("valuation of zero");
    BigInt rest;
    BigInt pz = p;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t()));
}

inline long valuation(const BigRational& r, unsigned long p) {
    return valuation(r.get_num(), p) - valuation(r.get_den(), p);
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    BigInt z = static_cast<unsigned long>(n);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t lcm_i64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_i64(a, b) * b;
}

} // namespace qvolk
