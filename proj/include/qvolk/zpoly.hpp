#pragma once

// Dense polynomials over Z. This is the arithmetic kernel underneath the
// rational-function field: multiplication by Kronecker substitution on top of
// GMP, exact division, and a small-primes modular gcd (Brown) with trial
// division as the final certificate.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "bigrational.hpp"

namespace qvolk::zpoly {

/// Coefficients by ascending degree, no trailing zeros; empty means 0.
using ZPoly = std::vector<BigInt>;

inline void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long degree(const ZPoly& a) { return static_cast<long>(a.size()) - 1; }

inline bool is_one(const ZPoly& a) { return a.size() == 1 && a[0] == 1; }

inline std::size_t bit_size(const BigInt& z) {
    return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

inline std::size_t max_bits(const ZPoly& a) {
    std::size_t b = 0;
    for (const auto& c : a) b = std::max(b, bit_size(c));
    return b;
}

inline ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline ZPoly scale(const ZPoly& a, const BigInt& c) {
    if (c == 0) return {};
    ZPoly r(a);
    for (auto& x : r) x *= c;
    return r;
}

inline ZPoly mul_schoolbook(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

namespace detail {

inline std::size_t ceil_log2(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

/// Evaluates a at 2^(64*slot_limbs). Requires |a_i| < 2^(64*slot_limbs).
inline BigInt kronecker_pack(const ZPoly& a, std::size_t slot_limbs) {
    std::vector<std::uint64_t> pos(a.size() * slot_limbs, 0);
    std::vector<std::uint64_t> neg;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int s = sgn(a[i]);
        if (s == 0) continue;
        if (s < 0 && neg.empty()) neg.assign(pos.size(), 0);
        auto& buf = s > 0 ? pos : neg;
        std::size_t count = 0;
        mpz_export(&buf[i * slot_limbs], &count, -1, 8, 0, 0, a[i].get_mpz_t());
    }
    BigInt x;
    mpz_import(x.get_mpz_t(), pos.size(), -1, 8, 0, 0, pos.data());
    if (!neg.empty()) {
        BigInt y;
        mpz_import(y.get_mpz_t(), neg.size(), -1, 8, 0, 0, neg.data());
        x -= y;
    }
    return x;
}

/// Inverse of kronecker_pack with balanced digits; nullopt when the value
/// does not fit `slots` coefficients of magnitude < 2^(64*slot_limbs - 1).
inline std::optional<ZPoly> kronecker_unpack(const BigInt& x, std::size_t slots,
                                             std::size_t slot_limbs) {
    int s = sgn(x);
    ZPoly out(slots);
    if (s == 0) return ZPoly{};
    BigInt ax = abs(x);
    std::size_t words = (bit_size(ax) + 63) / 64;
    std::size_t total = slots * slot_limbs;
    if (words > total) return std::nullopt;
    std::vector<std::uint64_t> buf(total, 0);
    std::size_t count = 0;
    mpz_export(buf.data(), &count, -1, 8, 0, 0, ax.get_mpz_t());
    const std::size_t slot_bits = 64 * slot_limbs;
    BigInt half, full;
    mpz_ui_pow_ui(half.get_mpz_t(), 2, slot_bits - 1);
    full = half * 2;
    int carry = 0;
    for (std::size_t i = 0; i < slots; ++i) {
        BigInt r;
        mpz_import(r.get_mpz_t(), slot_limbs, -1, 8, 0, 0, &buf[i * slot_limbs]);
        r += carry;
        if (r >= half) {
            r -= full;
            carry = 1;
        } else {
            carry = 0;
        }
        out[i] = s > 0 ? r : BigInt(-r);
    }
    if (carry != 0) return std::nullopt;
    trim(out);
    return out;
}

} // namespace detail

inline ZPoly mul_kronecker(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t bits = max_bits(a) + max_bits(b) +
                       detail::ceil_log2(std::min(a.size(), b.size())) + 2;
    std::size_t limbs = (bits + 63) / 64;
    BigInt x = detail::kronecker_pack(a, limbs);
    BigInt y = detail::kronecker_pack(b, limbs);
    BigInt z = x * y;
    return *detail::kronecker_unpack(z, a.size() + b.size() - 1, limbs);
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    if (a.size() == 1) return scale(b, a[0]);
    if (b.size() == 1) return scale(a, b[0]);
    if (std::min(a.size(), b.size()) < 24) return mul_schoolbook(a, b);
    return mul_kronecker(a, b);
}

/// Positive gcd of the coefficients (0 for the zero polynomial).
inline BigInt content(const ZPoly& a) {
    BigInt g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

/// Splits a = c * P with P primitive and lc(P) > 0. Returns c (0 for a = 0).
inline BigInt make_primitive(ZPoly& a) {
    if (a.empty()) return 0;
    BigInt c = content(a);
    if (a.back() < 0) c = -c;
    if (c != 1)
        for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return c;
}

/// w -> w^k.
inline ZPoly compose_power(const ZPoly& a, std::size_t k) {
    if (a.empty() || k == 1) return a;
    ZPoly r((a.size() - 1) * k + 1);
    for (std::size_t i = 0; i < a.size(); ++i) r[i * k] = a[i];
    return r;
}

inline std::optional<ZPoly> divexact_schoolbook(const ZPoly& a, const ZPoly& g) {
    if (g.empty()) throw precondition_error("polynomial division by zero");
    if (a.empty()) return ZPoly{};
    if (a.size() < g.size()) return std::nullopt;
    ZPoly r(a);
    ZPoly q(a.size() - g.size() + 1);
    const BigInt& lc = g.back();
    const std::size_t dg = g.size() - 1;
    for (std::size_t i = a.size(); i-- > dg;) {
        if (r[i] == 0) continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
        BigInt c;
        mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), lc.get_mpz_t());
        q[i - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j)
            mpz_submul(r[i - dg + j].get_mpz_t(), c.get_mpz_t(), g[j].get_mpz_t());
    }
    for (std::size_t i = 0; i < dg; ++i)
        if (r[i] != 0) return std::nullopt;
    trim(q);
    return q;
}

/// a / g when g divides a in Z[w], otherwise nullopt.
inline std::optional<ZPoly> divexact(const ZPoly& a, const ZPoly& g) {
    if (g.empty()) throw precondition_error("polynomial division by zero");
    if (a.empty()) return ZPoly{};
    if (a.size() < g.size()) return std::nullopt;
    if (g.size() == 1) {
        ZPoly q(a);
        for (auto& c : q) {
            if (!mpz_divisible_p(c.get_mpz_t(), g[0].get_mpz_t())) return std::nullopt;
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g[0].get_mpz_t());
        }
        return q;
    }
    const std::size_t qsize = a.size() - g.size() + 1;
    if (std::min(qsize, g.size()) < 24) return divexact_schoolbook(a, g);

    // Kronecker: pack at a slot wide enough for a and g, divide the integers,
    // then certify by multiplying back. A too-narrow slot for the quotient
    // only means falling back to the schoolbook route.
    std::size_t bits = std::max(max_bits(a), max_bits(g)) + detail::ceil_log2(a.size()) + 66;
    std::size_t limbs = (bits + 63) / 64;
    BigInt x = detail::kronecker_pack(a, limbs);
    BigInt y = detail::kronecker_pack(g, limbs);
    BigInt quo, rem;
    mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    if (rem != 0) return std::nullopt;
    auto q = detail::kronecker_unpack(quo, qsize, limbs);
    if (q && mul(*q, g) == a) return q;
    return divexact_schoolbook(a, g);
}

// ---------------------------------------------------------------------------
// Modular gcd

namespace modp {

using Poly = std::vector<std::uint64_t>;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly reduce(const ZPoly& a, std::uint64_t p) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), static_cast<unsigned long>(p));
    trim(r);
    return r;
}

/// a <- a mod b, b nonzero.
inline void rem_inplace(Poly& a, const Poly& b, std::uint64_t p) {
    const std::size_t db = b.size() - 1;
    const std::uint64_t ilc = inv(b.back(), p);
    for (std::size_t i = a.size(); i-- > db;) {
        if (a[i] == 0) continue;
        std::uint64_t c = mulmod(a[i], ilc, p);
        for (std::size_t j = 0; j <= db; ++j) {
            std::uint64_t t = mulmod(c, b[j], p);
            std::uint64_t& slot = a[i - db + j];
            slot = slot >= t ? slot - t : slot + p - t;
        }
    }
    a.resize(std::min(a.size(), db));
    trim(a);
}

/// Monic gcd over F_p.
inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
    while (!b.empty()) {
        rem_inplace(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        std::uint64_t ilc = inv(a.back(), p);
        for (auto& c : a) c = mulmod(c, ilc, p);
    }
    return a;
}

/// Primes just above 2^62, generated on demand and shared.
inline std::uint64_t prime(std::size_t index) {
    static std::mutex mu;
    static std::vector<std::uint64_t> primes;
    std::lock_guard lock(mu);
    while (primes.size() <= index) {
        BigInt z = primes.empty() ? BigInt(static_cast<unsigned long>(std::uint64_t{1} << 62))
                                  : BigInt(static_cast<unsigned long>(primes.back()));
        mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
        primes.push_back(z.get_ui());
    }
    return primes[index];
}

} // namespace modp

/// gcd of primitive a, b (both nonzero), primitive with lc > 0.
inline ZPoly gcd_primitive(const ZPoly& a, const ZPoly& b) {
    if (a.size() == 1 || b.size() == 1) return ZPoly{1};
    if (a == b) return a;

    BigInt gamma;
    mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

    std::size_t best = std::min(a.size(), b.size());  // degree bound + 1
    ZPoly acc;
    BigInt modulus;
    ZPoly previous;
    for (std::size_t k = 0;; ++k) {
        std::uint64_t p = modp::prime(k);
        unsigned long pu = static_cast<unsigned long>(p);
        if (mpz_fdiv_ui(a.back().get_mpz_t(), pu) == 0 || mpz_fdiv_ui(b.back().get_mpz_t(), pu) == 0)
            continue;
        modp::Poly g = modp::gcd(modp::reduce(a, p), modp::reduce(b, p), p);
        if (g.size() == 1) return ZPoly{1};
        if (g.size() > best) continue;  // unlucky prime
        if (g.size() < best || acc.empty()) {
            best = g.size();
            acc.assign(best, 0);
            modulus = 1;
            previous.clear();
        }
        std::uint64_t gm = mpz_fdiv_ui(gamma.get_mpz_t(), pu);
        for (auto& c : g) c = modp::mulmod(c, gm, p);

        // CRT: acc (mod modulus) and g (mod p).
        std::uint64_t minv = modp::inv(mpz_fdiv_ui(modulus.get_mpz_t(), pu), p);
        for (std::size_t i = 0; i < best; ++i) {
            std::uint64_t cur = mpz_fdiv_ui(acc[i].get_mpz_t(), pu);
            std::uint64_t diff = g[i] >= cur ? g[i] - cur : g[i] + p - cur;
            std::uint64_t t = modp::mulmod(diff, minv, p);
            BigInt tt = static_cast<unsigned long>(t);
            acc[i] += modulus * tt;
        }
        modulus *= BigInt(pu);

        BigInt half = modulus / 2;
        ZPoly cand(best);
        for (std::size_t i = 0; i < best; ++i)
            cand[i] = acc[i] > half ? BigInt(acc[i] - modulus) : acc[i];
        make_primitive(cand);
        if (cand == previous) {
            if (divexact(a, cand) && divexact(b, cand)) return cand;
        }
        previous = std::move(cand);
    }
}

/// gcd of arbitrary integer polynomials, primitive with lc > 0; gcd(0, 0) = 0.
inline ZPoly gcd(ZPoly a, ZPoly b) {
    if (a.empty()) {
        make_primitive(b);
        return b;
    }
    if (b.empty()) {
        make_primitive(a);
        return a;
    }
    make_primitive(a);
    make_primitive(b);
    return gcd_primitive(a, b);
}

} // namespace qvolk::zpoly
