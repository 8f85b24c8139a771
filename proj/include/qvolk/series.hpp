#pragma once

// Truncated formal power series c_0 + c_1 t + ... + c_T t^T over an exact
// field (BigRational or RationalFunction).

#include <cstddef>
#include <utility>
#include <vector>

#include "bigrational.hpp"
#include "rational_function.hpp"

namespace qvolk {

inline BigRational zero_like(const BigRational&) { return 0; }
inline BigRational one_like(const BigRational&) { return 1; }
inline BigRational field_inverse(const BigRational& x) {
    if (x == 0) throw precondition_error("inverse of zero");
    return BigRational(1) / x;
}

inline RationalFunction zero_like(const RationalFunction& x) { return RationalFunction(x.root_order()); }
inline RationalFunction one_like(const RationalFunction& x) { return RationalFunction::constant(1, x.root_order()); }
inline RationalFunction field_inverse(const RationalFunction& x) { return x.inverse(); }

template <class C>
class TruncatedSeries {
public:
    /// Exactly order+1 coefficients.
    explicit TruncatedSeries(std::vector<C> coefficients) : c_(std::move(coefficients)) {
        if (c_.empty()) throw precondition_error("a truncated series needs at least one coefficient");
    }

    /// The series with every coefficient zero, shaped like `prototype`.
    static TruncatedSeries zero(int order, const C& prototype) {
        if (order < 0) throw precondition_error("series order must be nonnegative");
        return TruncatedSeries(std::vector<C>(static_cast<std::size_t>(order) + 1, zero_like(prototype)));
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const C& operator[](std::size_t n) const { return c_[n]; }
    C& operator[](std::size_t n) { return c_[n]; }
    const std::vector<C>& coefficients() const { return c_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        check(a, b);
        TruncatedSeries r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        check(a, b);
        TruncatedSeries r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    /// Cauchy product truncated at the common order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        check(a, b);
        TruncatedSeries r = zero(a.order(), a.c_[0]);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j < a.c_.size(); ++j)
                if (!is_zero(b.c_[j])) r.c_[i + j] = r.c_[i + j] + C(a.c_[i] * b.c_[j]);
        }
        return r;
    }

    TruncatedSeries scaled(const C& s) const {
        TruncatedSeries r = *this;
        for (auto& x : r.c_) x = C(s * x);
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

private:
    static void check(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order() != b.order()) throw precondition_error("series order mismatch");
    }

    std::vector<C> c_;
};

enum class SeriesOp { add, mul, scale };

/// add/mul combine a and b; scale multiplies a by the constant term of b.
template <class C>
TruncatedSeries<C> series_arith(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b, SeriesOp op) {
    switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::mul: return a * b;
    case SeriesOp::scale: return a.scaled(b[0]);
    }
    throw precondition_error("unknown series operation");
}

/// exp(s) for s(0) = 0, via n e_n = sum_{k=1}^n k s_k e_{n-k}.
template <class C>
TruncatedSeries<C> series_exp(const TruncatedSeries<C>& s) {
    if (!is_zero(s[0])) throw precondition_error("series_exp needs a zero constant term");
    const int order = s.order();
    auto e = TruncatedSeries<C>::zero(order, s[0]);
    e[0] = one_like(s[0]);
    for (int n = 1; n <= order; ++n) {
        C acc = zero_like(s[0]);
        for (int k = 1; k <= n; ++k)
            if (!is_zero(s[k])) acc = acc + C(BigRational(k) * C(s[k] * e[n - k]));
        e[n] = C(BigRational(1, n) * acc);
    }
    return e;
}

/// 1/s for s(0) != 0.
template <class C>
TruncatedSeries<C> series_inverse(const TruncatedSeries<C>& s) {
    if (is_zero(s[0])) throw precondition_error("series_inverse needs a nonzero constant term");
    const int order = s.order();
    auto r = TruncatedSeries<C>::zero(order, s[0]);
    const C inv0 = field_inverse(s[0]);
    r[0] = inv0;
    for (int n = 1; n <= order; ++n) {
        C acc = zero_like(s[0]);
        for (int k = 1; k <= n; ++k)
            if (!is_zero(s[k])) acc = acc + C(s[k] * r[n - k]);
        r[n] = C(-C(inv0 * acc));
    }
    return r;
}

/// e^t to order T.
inline TruncatedSeries<BigRational> exp_t(int order) {
    std::vector<BigRational> c(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) c[static_cast<std::size_t>(n)] = BigRational(1) / BigRational(factorial(static_cast<unsigned long>(n)));
    return TruncatedSeries<BigRational>(std::move(c));
}

/// 2/(e^t + 1); n! c_n = E_n.
inline TruncatedSeries<BigRational> euler_gf(int order) {
    if (order < 0) throw precondition_error("series order must be nonnegative");
    auto half_sum = exp_t(order);
    half_sum[0] += 1;
    return series_inverse(half_sum.scaled(BigRational(1, 2)));
}

/// t/(e^t - 1); n! c_n = B_n.
inline TruncatedSeries<BigRational> bernoulli_gf(int order) {
    if (order < 0) throw precondition_error("series order must be nonnegative");
    // (e^t - 1)/t = sum t^k/(k+1)!
    std::vector<BigRational> c(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k)
        c[static_cast<std::size_t>(k)] = BigRational(1) / BigRational(factorial(static_cast<unsigned long>(k + 1)));
    return series_inverse(TruncatedSeries<BigRational>(std::move(c)));
}

/// n! [t^n] s for n = 0..T.
template <class C>
std::vector<C> scaled_coefficients(const TruncatedSeries<C>& s) {
    std::vector<C> out;
    for (int n = 0; n <= s.order(); ++n) out.push_back(C(BigRational(factorial(static_cast<unsigned long>(n))) * s[static_cast<std::size_t>(n)]));
    return out;
}

} // namespace qvolk
