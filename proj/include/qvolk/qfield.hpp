#pragma once

// The three readings of q: an indeterminate (exact symbolic field Q(w) with
// w^D = q), a rational number, or an admissible p-adic number. Every formula
// in the library is written once against the QReading concept.
//
// A reading also carries a base exponent m so that the same machinery
// evaluates at base q^m: power(e) is (q^m)^e = q^(m e), which only requires
// m*e to be integral (symbolically: D*m*e). This is how K_{n,q^m}((a+x)/m)
// is realised without any fractional powers on the p-adic side.

#include <concepts>
#include <cstdint>
#include <string>
#include <variant>

#include "bigrational.hpp"
#include "padic.hpp"
#include "rational_function.hpp"

namespace qvolk {

template <class Q>
concept QReading = requires(const Q& q, const BigRational& r, long m) {
    typename Q::value_type;
    { q.constant(r) } -> std::same_as<typename Q::value_type>;
    { q.power(r) } -> std::same_as<typename Q::value_type>;
    { q.with_base_power(m) } -> std::same_as<Q>;
    { q.describe() } -> std::convertible_to<std::string>;
};

namespace detail {

inline long integral_exponent(const BigRational& e, long long scale, const char* what) {
    BigRational t = e * BigRational(static_cast<long>(scale));
    if (t.get_den() != 1) throw precondition_error(std::string(what) + ": exponent " + to_string(e) +
                                                   " needs a fractional power of q");
    if (!t.get_num().fits_slong_p()) throw precondition_error("exponent out of range");
    return t.get_num().get_si();
}

} // namespace detail

/// q as an indeterminate; elements live in Q(w), w^D = q.
struct SymbolicQ {
    using value_type = RationalFunction;

    explicit SymbolicQ(int root_order_ = 1) : root_order(root_order_), base_exponent(root_order_) {
        if (root_order_ < 1) throw precondition_error("root order must be positive");
    }

    int root_order;
    /// The current base is w^base_exponent.
    long long base_exponent;

    value_type constant(const BigRational& c) const { return RationalFunction::constant(c, root_order); }

    value_type power(const BigRational& e) const {
        if (e == 0) return constant(1);
        return RationalFunction::w_power(detail::integral_exponent(e, base_exponent, "symbolic q"),
                                         root_order);
    }

    SymbolicQ with_base_power(long m) const {
        SymbolicQ r = *this;
        r.base_exponent *= m;
        return r;
    }

    std::string describe() const { return "sym:" + std::to_string(root_order); }
};

/// q a rational number, q != 1.
struct RationalQ {
    using value_type = BigRational;

    explicit RationalQ(BigRational q_) : q(std::move(q_)) {
        if (q == 1) throw precondition_error("q = 1 is excluded");
    }

    BigRational q;
    long long base_exponent = 1;

    value_type constant(const BigRational& c) const { return c; }

    value_type power(const BigRational& e) const {
        return qvolk::pow(q, detail::integral_exponent(e, base_exponent, "rational q"));
    }

    RationalQ with_base_power(long m) const {
        RationalQ r = *this;
        r.base_exponent *= m;
        return r;
    }

    std::string describe() const { return to_string(q); }
};

/// q in Q_p with v_p(q - 1) >= 1.
struct PadicQ {
    using value_type = PadicNumber;

    PadicQ(const BigRational& q_, unsigned long p, int precision_ = default_padic_precision)
        : q(PadicNumber::from_rational(q_, p, precision_)), precision(precision_) {
        if (!q_admissible(q))
            throw inadmissible_q_error("q = " + to_string(q_) + " is not admissible at p = " + std::to_string(p) +
                                       " (need v_p(q - 1) >= 1)");
    }

    PadicNumber q;
    int precision;
    long long base_exponent = 1;

    unsigned long prime() const { return q.prime(); }

    value_type constant(const BigRational& c) const { return PadicNumber::from_rational(c, prime(), precision); }

    value_type power(const BigRational& e) const {
        return q.pow(detail::integral_exponent(e, base_exponent, "p-adic q"));
    }

    PadicQ with_base_power(long m) const {
        PadicQ r = *this;
        r.base_exponent *= m;
        return r;
    }

    std::string describe() const {
        return "padic:" + std::to_string(prime()) + ":" + to_string(q.to_rational()) + ":" +
               std::to_string(precision);
    }
};

/// Integer powers, uniform over the three value types.
inline BigRational ipow(const BigRational& b, long e) { return pow(b, e); }
inline RationalFunction ipow(const RationalFunction& b, long e) { return b.pow(e); }
inline PadicNumber ipow(const PadicNumber& b, long e) { return b.pow(e); }

/// [x]_q = (1 - q^x)/(1 - q) at the reading's current base.
template <QReading Q>
typename Q::value_type q_bracket(const BigRational& x, const Q& q) {
    using V = typename Q::value_type;
    const V one = q.constant(1);
    if (x == 0) return q.constant(0);
    if (x == 1) return one;
    return V((one - q.power(x)) / V(one - q.power(1)));
}

/// [n]_{-q} = (1 - (-q)^n)/(1 + q), integer n.
template <QReading Q>
typename Q::value_type q_bracket_neg(long n, const Q& q) {
    using V = typename Q::value_type;
    const V one = q.constant(1);
    V neg_pow = q.power(n);
    if (n % 2 != 0) neg_pow = -neg_pow;
    return V(V(one - neg_pow) / V(one + q.power(1)));
}

using QDescriptor = std::variant<SymbolicQ, RationalQ, PadicQ>;

/// "sym", "sym:D", "a/b", or "padic:p:q:A". A bare rational together with a
/// prime (the CLI's --p) also selects the p-adic reading.
inline QDescriptor parse_q_spec(const std::string& spec, unsigned long prime = 0,
                                int precision = default_padic_precision) {
    auto fields = [](const std::string& s) {
        std::vector<std::string> out;
        std::size_t start = 0;
        for (;;) {
            auto colon = s.find(':', start);
            out.push_back(s.substr(start, colon - start));
            if (colon == std::string::npos) break;
            start = colon + 1;
        }
        return out;
    };
    auto to_int = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            long v = std::stol(s, &used);
            if (used != s.size()) throw precondition_error("bad integer");
            return v;
        } catch (const std::logic_error&) {
            throw precondition_error("malformed q-spec '" + spec + "'");
        }
    };
    auto f = fields(spec);
    if (f[0] == "sym") {
        if (f.size() == 1) return SymbolicQ(1);
        if (f.size() == 2) return SymbolicQ(static_cast<int>(to_int(f[1])));
        throw precondition_error("malformed q-spec '" + spec + "'");
    }
    if (f[0] == "padic") {
        if (f.size() < 3 || f.size() > 4) throw precondition_error("malformed q-spec '" + spec + "'");
        int a = f.size() == 4 ? static_cast<int>(to_int(f[3])) : precision;
        return PadicQ(parse_rational(f[2]), static_cast<unsigned long>(to_int(f[1])), a);
    }
    if (f.size() != 1) throw precondition_error("malformed q-spec '" + spec + "'");
    BigRational q = parse_rational(spec);
    if (prime != 0) return PadicQ(q, prime, precision);
    return RationalQ(q);
}

} // namespace qvolk
