#pragma once

// q-Bernoulli numbers and polynomials (bosonic measure), the fermionic
// numbers K_{n,q} and polynomials K_{n,q}(x), the odd-m distribution
// relation, character twists K_{n,chi,q}, and the classical E_n / B_n.
//
// Everything is templated on the q-reading, so the same closed forms are
// evaluated symbolically (exact identities), at rational q, or p-adically
// (where they are compared with Riemann-sum integrals).

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "bigrational.hpp"
#include "cyclotomic.hpp"
#include "dirichlet.hpp"
#include "measure.hpp"
#include "qfield.hpp"
#include "series.hpp"

namespace qvolk {

enum class PolyForm { expansion, closed, integral };
enum class TwistMethod { integral, closed };

/// Level budget and target for the Riemann-sum route.
struct IntegralOptions {
    long stability = 6;
    int max_level = 8;
    unsigned threads = 0;
};

namespace detail {

template <QReading Q>
typename Q::value_type binom(long n, long k, const Q& q) {
    return q.constant(BigRational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))));
}

template <QReading Q>
typename Q::value_type inv_one_minus_q_pow(long n, const Q& q) {
    using V = typename Q::value_type;
    const V one = q.constant(1);
    return ipow(V(one / V(one - q.power(1))), n);
}

inline void check_nonnegative(long n, const char* what) {
    if (n < 0) throw precondition_error(std::string(what) + " must be nonnegative");
}

} // namespace detail

/// beta_{m,q} = (1/(1-q)^m) sum_i C(m,i) (-1)^i (i+1)/[i+1]_q.
template <QReading Q>
typename Q::value_type beta_number(long m, const Q& q) {
    using V = typename Q::value_type;
    detail::check_nonnegative(m, "m");
    V sum = q.constant(0);
    for (long i = 0; i <= m; ++i) {
        const V term = detail::binom(m, i, q) * bosonic_power_moment(i, q);
        if (i % 2 == 0)
            sum = sum + term;
        else
            sum = sum - term;
    }
    return V(detail::inv_one_minus_q_pow(m, q) * sum);
}

/// beta_{n,q}(x) through the bosonic Riemann sums of [x+t]_q^n (integer x).
inline IntegrationResult<PadicQ> beta_polynomial_integral(long n, const BigRational& x, const PadicQ& q,
                                                          const IntegralOptions& opts = {}) {
    detail::check_nonnegative(n, "n");
    if (x.get_den() != 1) throw precondition_error("the p-adic route needs an integer x");
    MeasureSpec<PadicQ> spec(MeasureKind::bosonic, q, ProfiniteDomain(q.prime(), 1));
    return integrate(spec, integrand_shifted_bracket_pow(n, x, q), opts.stability, opts.max_level, opts.threads);
}

/// beta_{n,q}(x):
///   expansion: sum_i C(n,i) q^{ix} beta_{i,q} [x]_q^{n-i}
///   closed:    (1/(1-q)^n) sum_i C(n,i) (-1)^i q^{xi} (i+1)/[i+1]_q
///   integral:  p-adic Riemann-sum limit
template <QReading Q>
typename Q::value_type beta_polynomial(long n, const BigRational& x, const Q& q, PolyForm form,
                                       const IntegralOptions& opts = {}) {
    using V = typename Q::value_type;
    detail::check_nonnegative(n, "n");
    switch (form) {
    case PolyForm::expansion: {
        const V bx = q_bracket(x, q);
        V sum = q.constant(0);
        for (long i = 0; i <= n; ++i)
            sum = sum + V(detail::binom(n, i, q) * q.power(x * i) * beta_number(i, q) * ipow(bx, n - i));
        return sum;
    }
    case PolyForm::closed: {
        V sum = q.constant(0);
        for (long i = 0; i <= n; ++i) {
            const V term = detail::binom(n, i, q) * q.power(x * i) * bosonic_power_moment(i, q);
            if (i % 2 == 0)
                sum = sum + term;
            else
                sum = sum - term;
        }
        return V(detail::inv_one_minus_q_pow(n, q) * sum);
    }
    case PolyForm::integral:
        if constexpr (std::is_same_v<Q, PadicQ>) {
            return beta_polynomial_integral(n, x, q, opts).value;
        } else {
            throw precondition_error("the integral form needs a p-adic q");
        }
    }
    throw precondition_error("unknown polynomial form");
}

/// K_{k,q} = [2]_q (1/(1-q))^k sum_l C(k,l) (-1)^l / (1 + q^{l+1}).
template <QReading Q>
typename Q::value_type k_number(long k, const Q& q) {
    using V = typename Q::value_type;
    detail::check_nonnegative(k, "k");
    const V one = q.constant(1);
    V sum = q.constant(0);
    for (long l = 0; l <= k; ++l) {
        const V term = detail::binom(k, l, q) / V(one + q.power(l + 1));
        if (l % 2 == 0)
            sum = sum + term;
        else
            sum = sum - term;
    }
    return V(V(one + q.power(1)) * detail::inv_one_minus_q_pow(k, q) * sum);
}

/// K_{n,q}(x) through the fermionic Riemann sums of [x+y]_q^n (integer x).
inline IntegrationResult<PadicQ> k_polynomial_integral(long n, const BigRational& x, const PadicQ& q,
                                                       const IntegralOptions& opts = {}) {
    detail::check_nonnegative(n, "n");
    if (x.get_den() != 1) throw precondition_error("the p-adic route needs an integer x");
    MeasureSpec<PadicQ> spec(MeasureKind::fermionic, q, ProfiniteDomain(q.prime(), 1));
    return integrate(spec, integrand_shifted_bracket_pow(n, x, q), opts.stability, opts.max_level, opts.threads);
}

/// K_{n,q}(x):
///   closed:    [2]_q (1/(1-q))^n sum_k C(n,k) (-1)^k q^{xk} / (1 + q^{k+1})
///   expansion: sum_j C(n,j) [x]_q^{n-j} q^{jx} K_{j,q}
///   integral:  p-adic Riemann-sum limit
template <QReading Q>
typename Q::value_type k_polynomial(long n, const BigRational& x, const Q& q, PolyForm form,
                                    const IntegralOptions& opts = {}) {
    using V = typename Q::value_type;
    detail::check_nonnegative(n, "n");
    switch (form) {
    case PolyForm::closed: {
        const V one = q.constant(1);
        V sum = q.constant(0);
        for (long k = 0; k <= n; ++k) {
            const V term = detail::binom(n, k, q) * q.power(x * k) / V(one + q.power(k + 1));
            if (k % 2 == 0)
                sum = sum + term;
            else
                sum = sum - term;
        }
        return V(V(one + q.power(1)) * detail::inv_one_minus_q_pow(n, q) * sum);
    }
    case PolyForm::expansion: {
        const V bx = q_bracket(x, q);
        V sum = q.constant(0);
        for (long j = 0; j <= n; ++j)
            sum = sum + V(detail::binom(n, j, q) * ipow(bx, n - j) * q.power(x * j) * k_number(j, q));
        return sum;
    }
    case PolyForm::integral:
        if constexpr (std::is_same_v<Q, PadicQ>) {
            return k_polynomial_integral(n, x, q, opts).value;
        } else {
            throw precondition_error("the integral form needs a p-adic q");
        }
    }
    throw precondition_error("unknown polynomial form");
}

/// ([m]_q^n / [m]_{-q}) sum_{a<m} (-1)^a q^a K_{n,q^m}((a+x)/m), odd m.
template <QReading Q>
typename Q::value_type k_distribution_rhs(long n, const BigRational& x, long m, const Q& q) {
    using V = typename Q::value_type;
    detail::check_nonnegative(n, "n");
    if (m < 1 || m % 2 == 0) throw precondition_error("the distribution relation needs an odd positive m");
    const Q qm = q.with_base_power(m);
    V sum = q.constant(0);
    for (long a = 0; a < m; ++a) {
        const V term = q.power(a) * k_polynomial(n, BigRational(x + a) / BigRational(m), qm, PolyForm::closed);
        if (a % 2 == 0)
            sum = sum + term;
        else
            sum = sum - term;
    }
    return V(ipow(q_bracket(BigRational(m), q), n) / q_bracket_neg(m, q) * sum);
}

/// Value type of K_{n,chi,q}: symbolic results carry cyclotomic coefficients.
template <QReading Q>
using TwistedValue = std::conditional_t<std::is_same_v<Q, SymbolicQ>, CyclotomicElement, typename Q::value_type>;

namespace detail {

inline void check_twist_modulus(const DirichletCharacter& chi) {
    if (chi.modulus() % 2 == 0) throw precondition_error("character twists need an odd conductor f");
}

} // namespace detail

/// ([f]_q^n / [f]_{-q}) sum_{a<f} chi(a) (-1)^a q^a K_{n,q^f}(a/f).
template <QReading Q>
TwistedValue<Q> k_chi_closed(long n, const DirichletCharacter& chi, const Q& q) {
    using V = typename Q::value_type;
    detail::check_nonnegative(n, "n");
    detail::check_twist_modulus(chi);
    const long f = static_cast<long>(chi.modulus());
    const Q qf = q.with_base_power(f);
    const V prefactor = ipow(q_bracket(BigRational(f), q), n) / q_bracket_neg(f, q);

    if constexpr (std::is_same_v<Q, SymbolicQ>) {
        const int order = static_cast<int>(chi.value_order());
        CyclotomicElement sum(order, q.root_order);
        for (long a = 0; a < f; ++a) {
            CharacterValue v = chi.value(a);
            if (v.zero) continue;
            V term = q.power(a) * k_polynomial(n, make_rational(a, f), qf, PolyForm::closed);
            if (a % 2 != 0) term = -term;
            sum = sum + CyclotomicElement::z_power(order, static_cast<long>(v.exponent), term);
        }
        return prefactor * sum;
    } else {
        if (!chi.is_real())
            throw precondition_error("characters of order > 2 are only supported symbolically");
        V sum = q.constant(0);
        for (long a = 0; a < f; ++a) {
            int s = chi.value(a).sign();
            if (s == 0) continue;
            if (a % 2 != 0) s = -s;
            const V term = q.power(a) * k_polynomial(n, make_rational(a, f), qf, PolyForm::closed);
            if (s > 0)
                sum = sum + term;
            else
                sum = sum - term;
        }
        return V(prefactor * sum);
    }
}

/// y -> chi(y) [y]_q^n for a real character.
template <QReading Q>
Integrand<Q> integrand_char_twisted(long n, const DirichletCharacter& chi, const Q& q) {
    using V = typename Q::value_type;
    if (!chi.is_real()) throw precondition_error("twisted integrands need a character of order <= 2");
    const V zero = q.constant(0);
    auto bracket = integrand_bracket_pow(n, q);
    return [chi, bracket, zero](std::int64_t j, const V& qj) -> V {
        int s = chi.value(j).sign();
        if (s == 0) return zero;
        V b = bracket(j, qj);
        return s > 0 ? b : V(-b);
    };
}

/// K_{n,chi,q} as the fermionic Riemann-sum limit over X_f.
inline IntegrationResult<PadicQ> k_chi_integral(long n, const DirichletCharacter& chi, const PadicQ& q,
                                                const IntegralOptions& opts = {}) {
    detail::check_nonnegative(n, "n");
    detail::check_twist_modulus(chi);
    if (!chi.is_real()) throw precondition_error("the p-adic route needs a character of order <= 2");
    MeasureSpec<PadicQ> spec(MeasureKind::fermionic, q, ProfiniteDomain(q.prime(), chi.modulus()));
    return integrate(spec, integrand_char_twisted(n, chi, q), opts.stability, opts.max_level, opts.threads);
}

template <QReading Q>
TwistedValue<Q> k_chi(long n, const DirichletCharacter& chi, const Q& q, TwistMethod method,
                      const IntegralOptions& opts = {}) {
    if (method == TwistMethod::closed) return k_chi_closed(n, chi, q);
    if constexpr (std::is_same_v<Q, PadicQ>) {
        return k_chi_integral(n, chi, q, opts).value;
    } else {
        throw precondition_error("the integral method needs a p-adic q");
    }
}

/// E_0..E_{n_max} from 2/(e^t + 1).
inline std::vector<BigRational> classical_euler(int n_max) {
    return scaled_coefficients(euler_gf(n_max));
}

/// B_0..B_{n_max} from t/(e^t - 1).
inline std::vector<BigRational> classical_bernoulli(int n_max) {
    return scaled_coefficients(bernoulli_gf(n_max));
}

} // namespace qvolk
