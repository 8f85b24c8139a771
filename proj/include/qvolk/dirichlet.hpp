#pragma once

// Dirichlet characters mod f: the unit group (Z/f)^x as a product of cyclic
// factors, characters indexed by exponent vectors, values as roots of unity.
// Moduli here are small, so discrete logarithms come from a full table.

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bigrational.hpp"
#include "cyclotomic.hpp"

namespace qvolk {

struct CyclicFactor {
    std::int64_t generator;  // lifted to the full modulus
    std::int64_t order;

    friend bool operator==(const CyclicFactor&, const CyclicFactor&) = default;
};

struct UnitGroupStructure {
    std::int64_t modulus = 1;
    std::vector<CyclicFactor> factors;
    /// logs[a] = exponents of a in the generators (unused entries for non-units).
    std::vector<std::vector<std::int64_t>> logs;

    std::int64_t size() const {
        std::int64_t n = 1;
        for (const auto& c : factors) n *= c.order;
        return n;
    }
};

namespace detail {

inline std::int64_t mulmod_small(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

inline std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
    if (m == 1) return 1;
    std::int64_t x = a % m, k = 1;
    while (x != 1) {
        x = mulmod_small(x, a, m);
        ++k;
    }
    return k;
}

inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// x = r mod m, x = 1 mod (f/m), with gcd(m, f/m) = 1.
inline std::int64_t crt_lift(std::int64_t r, std::int64_t m, std::int64_t f) {
    for (std::int64_t x = r % m; x < f; x += m)
        if (x % (f / m) == 1 % (f / m)) return x;
    throw precondition_error("crt_lift: incompatible moduli");
}

} // namespace detail

/// (Z/f)^x as a product of cyclic groups, one per odd prime power and up to
/// two for the power of 2.
inline UnitGroupStructure unit_group_structure(std::int64_t f) {
    if (f < 1) throw precondition_error("modulus must be positive");
    UnitGroupStructure g;
    g.modulus = f;
    for (auto [p, e] : detail::factorize(f)) {
        std::int64_t pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        if (p == 2) {
            if (e == 2) g.factors.push_back({detail::crt_lift(3, pe, f), 2});
            if (e >= 3) {
                g.factors.push_back({detail::crt_lift(pe - 1, pe, f), 2});
                g.factors.push_back({detail::crt_lift(5, pe, f), pe / 4});
            }
            continue;
        }
        const std::int64_t phi = pe / p * (p - 1);
        for (std::int64_t c = 2; c < pe; ++c) {
            if (c % p == 0) continue;
            if (detail::multiplicative_order(c, pe) == phi) {
                g.factors.push_back({detail::crt_lift(c, pe, f), phi});
                break;
            }
        }
    }
    // Discrete-log table by walking every exponent vector.
    g.logs.assign(static_cast<std::size_t>(f), {});
    std::vector<std::int64_t> exps(g.factors.size(), 0);
    for (;;) {
        std::int64_t a = 1 % f;
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (std::int64_t k = 0; k < exps[i]; ++k) a = detail::mulmod_small(a, g.factors[i].generator, f);
        g.logs[static_cast<std::size_t>(a)] = exps;
        std::size_t i = 0;
        while (i < exps.size() && ++exps[i] == g.factors[i].order) exps[i++] = 0;
        if (i == exps.size()) break;
    }
    return g;
}

/// chi(a) = zeta_L^exponent, or zero when gcd(a, f) > 1.
struct CharacterValue {
    bool zero = false;
    std::int64_t order = 1;
    std::int64_t exponent = 0;

    /// The value as -1, 0 or 1; only meaningful for order <= 2.
    int sign() const { return zero ? 0 : (order == 2 && exponent == 1 ? -1 : 1); }

    friend bool operator==(const CharacterValue&, const CharacterValue&) = default;
};

class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group, std::vector<std::int64_t> exponents)
        : group_(std::move(group)), exponents_(std::move(exponents)) {
        if (exponents_.size() != group_->factors.size())
            throw precondition_error("character exponent vector has wrong length for modulus " +
                                     std::to_string(group_->modulus));
        value_order_ = 1;
        for (std::size_t i = 0; i < exponents_.size(); ++i) {
            const auto ord = group_->factors[i].order;
            if (exponents_[i] < 0 || exponents_[i] >= ord)
                throw precondition_error("character exponent out of range");
            value_order_ = lcm_i64(value_order_, ord / gcd_i64(exponents_[i], ord));
        }
    }

    std::int64_t modulus() const { return group_->modulus; }
    const std::vector<std::int64_t>& exponents() const { return exponents_; }
    std::int64_t value_order() const { return value_order_; }
    bool is_real() const { return value_order_ <= 2; }
    const UnitGroupStructure& group() const { return *group_; }

    /// "f:e1,e2,..."
    std::string id() const {
        std::string s = std::to_string(modulus()) + ":";
        for (std::size_t i = 0; i < exponents_.size(); ++i) s += (i ? "," : "") + std::to_string(exponents_[i]);
        return s;
    }

    CharacterValue value(std::int64_t a) const {
        const std::int64_t f = modulus();
        a %= f;
        if (a < 0) a += f;
        if (gcd_i64(a, f) != 1) return {true, value_order_, 0};
        const auto& log = group_->logs[static_cast<std::size_t>(a)];
        std::int64_t k = 0;
        for (std::size_t i = 0; i < exponents_.size(); ++i) {
            const auto ord = group_->factors[i].order;
            const auto g = gcd_i64(exponents_[i], ord);
            // e_i l_i / ord_i = (e_i/g) l_i / (ord_i/g), and ord_i/g divides L.
            k += (exponents_[i] / g) * log[i] % value_order_ * (value_order_ / (ord / g));
            k %= value_order_;
        }
        return {false, value_order_, k};
    }

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
    }

private:
    std::shared_ptr<const UnitGroupStructure> group_;
    std::vector<std::int64_t> exponents_;
    std::int64_t value_order_ = 1;
};

/// All phi(f) characters, lexicographic in the exponent vectors.
inline std::vector<DirichletCharacter> enumerate_characters(std::int64_t f) {
    auto group = std::make_shared<const UnitGroupStructure>(unit_group_structure(f));
    std::vector<DirichletCharacter> out;
    std::vector<std::int64_t> exps(group->factors.size(), 0);
    for (;;) {
        out.emplace_back(group, exps);
        // Last coordinate varies fastest.
        std::size_t i = exps.size();
        while (i > 0 && ++exps[i - 1] == group->factors[i - 1].order) exps[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

inline DirichletCharacter parse_character_id(const std::string& id) {
    auto colon = id.find(':');
    if (colon == std::string::npos) throw precondition_error("character id must look like 'f:e1,e2,...'");
    std::int64_t f = 0;
    std::vector<std::int64_t> exps;
    try {
        f = std::stoll(id.substr(0, colon));
        std::string rest = id.substr(colon + 1);
        std::size_t start = 0;
        while (start < rest.size()) {
            auto comma = rest.find(',', start);
            exps.push_back(std::stoll(rest.substr(start, comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    } catch (const std::logic_error&) {
        throw precondition_error("malformed character id '" + id + "'");
    }
    if (f < 1) throw precondition_error("malformed character id '" + id + "'");
    return DirichletCharacter(std::make_shared<const UnitGroupStructure>(unit_group_structure(f)), std::move(exps));
}

/// chi(a): -1/0/1 as a rational for order <= 2, otherwise z^k in Q(w)(zeta_L).
inline std::variant<BigRational, CyclotomicElement> character_value(const DirichletCharacter& chi, std::int64_t a,
                                                                    int root_order = 1) {
    CharacterValue v = chi.value(a);
    if (chi.is_real()) return BigRational(v.sign());
    if (v.zero) return CyclotomicElement(static_cast<int>(v.order), root_order);
    return CyclotomicElement::z_power(static_cast<int>(v.order), static_cast<long>(v.exponent),
                                      RationalFunction::constant(1, root_order));
}

struct Conductor {
    std::int64_t conductor;
    bool primitive;
};

/// Smallest f0 | f such that chi is trivial on units a = 1 (mod f0).
inline Conductor conductor(const DirichletCharacter& chi) {
    const std::int64_t f = chi.modulus();
    for (std::int64_t f0 = 1; f0 <= f; ++f0) {
        if (f % f0) continue;
        bool induced = true;
        for (std::int64_t a = 1; a < f && induced; a += f0) {
            if (gcd_i64(a, f) != 1) continue;
            CharacterValue v = chi.value(a);
            induced = v.exponent == 0;
        }
        if (induced) return {f0, f0 == f};
    }
    return {f, true};
}

} // namespace qvolk
