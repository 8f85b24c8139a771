#pragma once

// The symbolic field Q(w), w^D = q. Every value is kept gcd-reduced, so two
// elements are equal iff their representations are identical.
//
// Internally a value is scale * N(w) / Dn(w) with N, Dn primitive integer
// polynomials of positive leading coefficient. The public view
// (numerator()/denominator()) is the equivalent form with monic denominator.

#include <cstddef>
#include <cstdlib>
#include <string>
#include <utility>

#include "bigrational.hpp"
#include "polynomial.hpp"
#include "zpoly.hpp"

namespace qvolk {

class RationalFunction {
public:
    /// Zero in Q(w) with w^D = q.
    explicit RationalFunction(int root_order = 1) : scale_(0), den_{1}, root_order_(root_order) {
        check_root_order(root_order);
    }

    static RationalFunction constant(const BigRational& c, int root_order = 1) {
        RationalFunction r(root_order);
        if (c != 0) {
            r.scale_ = c;
            r.num_ = {1};
        }
        return r;
    }

    /// w^k; negative k gives 1/w^(-k).
    static RationalFunction w_power(long k, int root_order = 1) {
        RationalFunction r(root_order);
        r.scale_ = 1;
        zpoly::ZPoly mono(static_cast<std::size_t>(std::labs(k)) + 1);
        mono.back() = 1;
        if (k >= 0) {
            r.num_ = std::move(mono);
        } else {
            r.num_ = {1};
            r.den_ = std::move(mono);
        }
        return r;
    }

    /// Canonical element num/den; throws on den = 0.
    static RationalFunction from_fraction(const QPoly& num, const QPoly& den, int root_order) {
        if (den.is_zero()) throw precondition_error("rational function with zero denominator");
        check_root_order(root_order);
        BigRational sn, sd;
        auto n = to_primitive_zpoly(num, sn);
        auto d = to_primitive_zpoly(den, sd);
        if (n.empty()) return RationalFunction(root_order);
        auto g = zpoly::gcd_primitive(n, d);
        if (!zpoly::is_one(g)) {
            n = *zpoly::divexact(n, g);
            d = *zpoly::divexact(d, g);
        }
        return RationalFunction(sn / sd, std::move(n), std::move(d), root_order);
    }

    static RationalFunction from_polynomial(const QPoly& num, int root_order) {
        return from_fraction(num, QPoly::constant(1), root_order);
    }

    int root_order() const { return root_order_; }
    bool is_zero() const { return num_.empty(); }
    bool is_constant() const { return num_.size() <= 1 && den_.size() == 1; }
    long numerator_degree() const { return zpoly::degree(num_); }
    long denominator_degree() const { return zpoly::degree(den_); }

    /// Numerator of the monic-denominator form.
    QPoly numerator() const {
        if (is_zero()) return {};
        return from_zpoly(num_, scale_ / BigRational(den_.back()));
    }

    /// Monic denominator.
    QPoly denominator() const { return from_zpoly(den_, BigRational(1) / BigRational(den_.back())); }

    BigRational evaluate(const BigRational& point) const {
        BigRational d = horner(den_, point);
        if (d == 0) throw pole_error("pole at w = " + qvolk::to_string(point));
        if (is_zero()) return 0;
        return scale_ * horner(num_, point) / d;
    }

    RationalFunction inverse() const {
        if (is_zero()) throw precondition_error("inverse of zero rational function");
        return RationalFunction(BigRational(1) / scale_, den_, num_, root_order_);
    }

    RationalFunction pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        if (e == 0) return constant(1, root_order_);
        if (is_zero()) return *this;
        // gcd(N, D) = 1 implies gcd(N^e, D^e) = 1.
        return RationalFunction(qvolk::pow(scale_, e), zpow(num_, e), zpow(den_, e), root_order_);
    }

    /// w -> w'^(D_new / D); the result lives in Q(w') with w'^D_new = q.
    RationalFunction rebased(int new_root_order) const {
        check_root_order(new_root_order);
        if (new_root_order % root_order_ != 0)
            throw precondition_error("root order " + std::to_string(new_root_order) +
                                     " is not a multiple of " + std::to_string(root_order_));
        auto k = static_cast<std::size_t>(new_root_order / root_order_);
        // Substitution preserves coprimality (apply it to a Bezout identity).
        return RationalFunction(scale_, zpoly::compose_power(num_, k), zpoly::compose_power(den_, k),
                                new_root_order);
    }

    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r = a;
        r.scale_ = -r.scale_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        check_same_field(a, b);
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        // Henrici: with g = gcd(Da, Db), a + b = T / (g Ea Eb) where only
        // gcd(T, g) can be nontrivial.
        zpoly::ZPoly g, ea, eb;
        if (a.den_ == b.den_) {
            g = a.den_;
            ea = eb = zpoly::ZPoly{1};
        } else {
            g = zpoly::gcd_primitive(a.den_, b.den_);
            ea = zpoly::is_one(g) ? a.den_ : *zpoly::divexact(a.den_, g);
            eb = zpoly::is_one(g) ? b.den_ : *zpoly::divexact(b.den_, g);
        }
        BigInt l;
        mpz_lcm(l.get_mpz_t(), a.scale_.get_den_mpz_t(), b.scale_.get_den_mpz_t());
        BigInt ca = a.scale_.get_num() * (l / a.scale_.get_den());
        BigInt cb = b.scale_.get_num() * (l / b.scale_.get_den());
        auto t = zpoly::add(zpoly::scale(zpoly::mul(a.num_, eb), ca),
                            zpoly::scale(zpoly::mul(b.num_, ea), cb));
        if (t.empty()) return RationalFunction(a.root_order_);
        BigInt content = zpoly::make_primitive(t);
        auto g2 = zpoly::gcd_primitive(t, g);
        if (!zpoly::is_one(g2)) {
            t = *zpoly::divexact(t, g2);
            g = *zpoly::divexact(g, g2);
        }
        auto den = zpoly::mul(zpoly::mul(g, ea), eb);
        return RationalFunction(make_rational(content, l), std::move(t), std::move(den), a.root_order_);
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        check_same_field(a, b);
        if (a.is_zero() || b.is_zero()) return RationalFunction(a.root_order_);
        auto g1 = zpoly::gcd_primitive(a.num_, b.den_);
        auto g2 = zpoly::gcd_primitive(b.num_, a.den_);
        auto cut = [](const zpoly::ZPoly& x, const zpoly::ZPoly& g) {
            return zpoly::is_one(g) ? x : *zpoly::divexact(x, g);
        };
        auto num = zpoly::mul(cut(a.num_, g1), cut(b.num_, g2));
        auto den = zpoly::mul(cut(a.den_, g2), cut(b.den_, g1));
        return RationalFunction(a.scale_ * b.scale_, std::move(num), std::move(den), a.root_order_);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inverse();
    }

    friend RationalFunction operator*(const BigRational& s, const RationalFunction& a) {
        if (s == 0 || a.is_zero()) return RationalFunction(a.root_order_);
        RationalFunction r = a;
        r.scale_ *= s;
        return r;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.root_order_ == b.root_order_ && a.scale_ == b.scale_ && a.num_ == b.num_ &&
               a.den_ == b.den_;
    }

    friend bool is_zero(const RationalFunction& f) { return f.is_zero(); }

    std::string to_string() const {
        auto poly = [](const QPoly& p) {
            std::string s;
            for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
                const auto& c = p[i];
                if (c == 0) continue;
                std::string term = qvolk::to_string(abs(c));
                if (!s.empty() || c < 0) s += c < 0 ? (s.empty() ? "-" : " - ") : " + ";
                if (i == 0)
                    s += term;
                else
                    s += (abs(c) == 1 ? "" : term + "*") + (i == 1 ? "w" : "w^" + std::to_string(i));
            }
            return s.empty() ? std::string("0") : s;
        };
        std::string n = poly(numerator());
        if (den_.size() == 1) return n;
        return "(" + n + ")/(" + poly(denominator()) + ")";
    }

private:
    RationalFunction(BigRational scale, zpoly::ZPoly num, zpoly::ZPoly den, int root_order)
        : scale_(std::move(scale)), num_(std::move(num)), den_(std::move(den)), root_order_(root_order) {
        if (scale_ == 0 || num_.empty()) {
            scale_ = 0;
            num_.clear();
            den_ = {1};
        }
    }

    static void check_root_order(int d) {
        if (d < 1) throw precondition_error("root order must be positive");
    }

    static void check_same_field(const RationalFunction& a, const RationalFunction& b) {
        if (a.root_order_ != b.root_order_)
            throw precondition_error("root order mismatch (" + std::to_string(a.root_order_) + " vs " +
                                     std::to_string(b.root_order_) + "); rebase first");
    }

    static BigRational horner(const zpoly::ZPoly& p, const BigRational& t) {
        BigRational acc = 0;
        for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + BigRational(p[i]);
        return acc;
    }

    static zpoly::ZPoly zpow(const zpoly::ZPoly& base, long e) {
        zpoly::ZPoly r{1}, b = base;
        while (e > 0) {
            if (e & 1) r = zpoly::mul(r, b);
            e >>= 1;
            if (e) b = zpoly::mul(b, b);
        }
        return r;
    }

    BigRational scale_;
    zpoly::ZPoly num_;
    zpoly::ZPoly den_;
    int root_order_;
};

// Free-function forms of the exact-algebra operations.

inline RationalFunction reduce_fraction(const QPoly& num, const QPoly& den, int root_order) {
    return RationalFunction::from_fraction(num, den, root_order);
}

inline BigRational evaluate(const RationalFunction& f, const BigRational& point) {
    return f.evaluate(point);
}

/// q -> 1 (equivalently w -> 1). Removable singularities are already gone
/// after reduction, so a vanishing denominator here is a genuine pole.
inline BigRational limit_at_one(const RationalFunction& f) {
    try {
        return f.evaluate(1);
    } catch (const pole_error&) {
        throw pole_error("genuine pole at q = 1: " + f.to_string());
    }
}

inline RationalFunction rebase_root_order(const RationalFunction& f, int new_root_order) {
    return f.rebased(new_root_order);
}

} // namespace qvolk
