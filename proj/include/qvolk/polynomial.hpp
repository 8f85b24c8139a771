#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bigrational.hpp"
#include "zpoly.hpp"

namespace qvolk {

inline bool is_zero(const BigRational& r) { return r == 0; }

/// Dense univariate polynomial, coefficients by ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
template <class R>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<R> coefficients) : c_(std::move(coefficients)) { trim(); }

    static Polynomial constant(R c) { return Polynomial(std::vector<R>{std::move(c)}); }

    static Polynomial monomial(R c, std::size_t k) {
        if (is_zero(c)) return {};
        std::vector<R> v(k + 1, c - c);
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coefficients() const { return c_; }
    const R& leading() const { return c_.back(); }
    const R& operator[](std::size_t i) const { return c_[i]; }

    template <class T>
    T evaluate(const T& point) const {
        T acc = point - point;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * point + c_[i];
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() < b.c_.size()) return b + a;
        std::vector<R> r = a.c_;
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a) {
        std::vector<R> r = a.c_;
        for (auto& x : r) x = -x;
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> r(a.c_.size() + b.c_.size() - 1, a.c_[0] - a.c_[0]);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const R& s, const Polynomial& a) {
        std::vector<R> r = a.c_;
        for (auto& x : r) x = s * x;
        return Polynomial(std::move(r));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && qvolk::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<R> c_;
};

using QPoly = Polynomial<BigRational>;

/// Writes a = scale * P with P in Z[w] primitive, lc(P) > 0.
inline zpoly::ZPoly to_primitive_zpoly(const QPoly& a, BigRational& scale) {
    if (a.is_zero()) {
        scale = 0;
        return {};
    }
    BigInt l = 1;
    for (const auto& c : a.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    zpoly::ZPoly z;
    z.reserve(a.coefficients().size());
    for (const auto& c : a.coefficients()) z.push_back(c.get_num() * (l / c.get_den()));
    BigInt content = zpoly::make_primitive(z);
    scale = make_rational(content, l);
    return z;
}

inline QPoly from_zpoly(const zpoly::ZPoly& z, const BigRational& scale = 1) {
    std::vector<BigRational> c;
    c.reserve(z.size());
    for (const auto& x : z) c.push_back(scale * BigRational(x));
    return QPoly(std::move(c));
}

/// Quotient and remainder over Q.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw precondition_error("polynomial division by zero");
    std::vector<BigRational> r = a.coefficients();
    if (a.degree() < b.degree()) return {QPoly{}, a};
    std::vector<BigRational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t i = r.size(); i-- > db;) {
        BigRational c = r[i] / b.leading();
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
    }
    r.resize(db);
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

/// Monic gcd over Q (zero when both inputs are zero).
inline QPoly gcd(const QPoly& a, const QPoly& b) {
    BigRational sa, sb;
    auto g = zpoly::gcd(to_primitive_zpoly(a, sa), to_primitive_zpoly(b, sb));
    if (g.empty()) return {};
    BigRational lc(g.back());
    return from_zpoly(g, BigRational(1) / lc);
}

} // namespace qvolk
