#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rational_function.hpp"
#include "zpoly.hpp"

namespace qvolk {

/// Phi_L as an integer polynomial.
inline zpoly::ZPoly cyclotomic_polynomial(int order) {
    if (order < 1) throw precondition_error("cyclotomic order must be positive");
    zpoly::ZPoly r(static_cast<std::size_t>(order) + 1);
    r[0] = -1;
    r.back() = 1;
    for (int d = 1; d < order; ++d)
        if (order % d == 0) r = *zpoly::divexact(r, cyclotomic_polynomial(d));
    return r;
}

/// Element of Q(w)(z) with z a primitive L-th root of unity, stored as a
/// polynomial in z of degree < phi(L) with coefficients in Q(w).
class CyclotomicElement {
public:
    CyclotomicElement(int order, int root_order)
        : order_(order), root_order_(root_order), modulus_(cyclotomic_polynomial(order)) {
        coeffs_.assign(static_cast<std::size_t>(zpoly::degree(modulus_)), RationalFunction(root_order));
    }

    /// c * z^k.
    static CyclotomicElement z_power(int order, long k, const RationalFunction& c) {
        CyclotomicElement r(order, c.root_order());
        long kk = ((k % order) + order) % order;
        std::vector<RationalFunction> raw(static_cast<std::size_t>(kk) + 1, RationalFunction(c.root_order()));
        raw.back() = c;
        r.assign_reduced(std::move(raw));
        return r;
    }

    static CyclotomicElement from_base(int order, const RationalFunction& c) { return z_power(order, 0, c); }

    int order() const { return order_; }
    int root_order() const { return root_order_; }
    /// Coefficients of 1, z, z^2, ... (length phi(L)).
    const std::vector<RationalFunction>& coefficients() const { return coeffs_; }

    /// True when the value lies in Q(w); `out` receives it.
    bool in_base_field(RationalFunction* out = nullptr) const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return false;
        if (out) *out = coeffs_[0];
        return true;
    }

    friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
        check(a, b);
        CyclotomicElement r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }

    friend CyclotomicElement operator-(const CyclotomicElement& a) {
        CyclotomicElement r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
        return a + (-b);
    }

    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
        check(a, b);
        std::vector<RationalFunction> raw(a.coeffs_.size() + b.coeffs_.size(),
                                          RationalFunction(a.root_order_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                if (!b.coeffs_[j].is_zero()) raw[i + j] = raw[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        CyclotomicElement r(a.order_, a.root_order_);
        r.assign_reduced(std::move(raw));
        return r;
    }

    friend CyclotomicElement operator*(const RationalFunction& s, const CyclotomicElement& a) {
        CyclotomicElement r = a;
        for (auto& c : r.coeffs_) c = s * c;
        return r;
    }

    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + coeffs_[i].to_string() + ")";
            if (i > 0) s += i == 1 ? "*z" : "*z^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    static void check(const CyclotomicElement& a, const CyclotomicElement& b) {
        if (a.order_ != b.order_) throw precondition_error("cyclotomic order mismatch");
        if (a.root_order_ != b.root_order_) throw precondition_error("root order mismatch");
    }

    // raw is an arbitrary polynomial in z; reduce it modulo the monic Phi_L.
    void assign_reduced(std::vector<RationalFunction> raw) {
        const std::size_t deg = coeffs_.size();
        for (std::size_t i = raw.size(); i-- > deg;) {
            if (raw[i].is_zero()) continue;
            RationalFunction c = raw[i];
            for (std::size_t j = 0; j <= deg; ++j)
                if (modulus_[j] != 0) raw[i - deg + j] = raw[i - deg + j] - BigRational(modulus_[j]) * c;
        }
        for (std::size_t i = 0; i < deg; ++i)
            coeffs_[i] = i < raw.size() ? raw[i] : RationalFunction(root_order_);
    }

    int order_;
    int root_order_;
    zpoly::ZPoly modulus_;
    std::vector<RationalFunction> coeffs_;
};

enum class ArithKind { add, sub, mul, div, scale };

inline CyclotomicElement cyclotomic_arith(const CyclotomicElement& a, const CyclotomicElement& b,
                                          ArithKind kind) {
    switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
    default: throw precondition_error("unsupported cyclotomic operation");
    }
}

} // namespace qvolk
