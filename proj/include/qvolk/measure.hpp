#pragma once

// Bosonic (mu_q) and fermionic (mu_{-q}) q-Volkenborn distributions on X_d,
// their Riemann sums, and the limiting integral with a Cauchy-type
// convergence certificate.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "bigrational.hpp"
#include "padic.hpp"
#include "qfield.hpp"

namespace qvolk {

enum class MeasureKind { bosonic, fermionic };

inline std::string to_string(MeasureKind k) { return k == MeasureKind::bosonic ? "bosonic" : "fermionic"; }

template <QReading Q>
struct MeasureSpec {
    MeasureSpec(MeasureKind kind_, Q q_, ProfiniteDomain domain_)
        : kind(kind_), q(std::move(q_)), domain(domain_) {
        // [dp^N]_{-q} = (1 + q^{dp^N})/(1 + q) needs dp^N odd.
        if (kind == MeasureKind::fermionic && domain.d % 2 == 0)
            throw precondition_error("fermionic measure on X_d requires odd d");
    }

    MeasureKind kind;
    Q q;
    ProfiniteDomain domain;
};

/// An integrand sampled on ball representatives. It receives j and base^j
/// (base = the measure's q, possibly q^m) so families built from q-powers need
/// no exponentiation per point.
template <QReading Q>
using Integrand = std::function<typename Q::value_type(std::int64_t j, const typename Q::value_type& base_pow_j)>;

template <QReading Q>
struct IntegrationResult {
    typename Q::value_type value;
    int levels_used = 0;
    /// v_p(S_N - S_{N-1}) at N = levels_used (a lower bound when that difference is zero-at-precision).
    long stability = 0;
    /// v_p(S_N - S_{N-1}) for N = 2 .. levels_used.
    std::vector<long> trace;
};

namespace detail {

template <QReading Q>
typename Q::value_type measure_normalizer(const MeasureSpec<Q>& spec, std::int64_t count) {
    if (spec.kind == MeasureKind::bosonic) return q_bracket(BigRational(static_cast<long>(count)), spec.q);
    return q_bracket_neg(static_cast<long>(count), spec.q);
}

inline unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

} // namespace detail

/// mu_q(a + dp^N X) = q^a/[dp^N]_q, mu_{-q}(a + dp^N X) = (-q)^a/[dp^N]_{-q}.
template <QReading Q>
typename Q::value_type ball_measure(const MeasureSpec<Q>& spec, std::int64_t a, int level) {
    std::int64_t count = ball_count(spec.domain, level);
    if (a < 0 || a >= count)
        throw precondition_error("ball index " + std::to_string(a) + " outside [0, " + std::to_string(count) + ")");
    typename Q::value_type weight = spec.q.power(BigRational(static_cast<long>(a)));
    if (spec.kind == MeasureKind::fermionic && a % 2 != 0) weight = -weight;
    return weight / detail::measure_normalizer(spec, count);
}

/// (1/[dp^N]_{+-q}) sum_{0 <= j < dp^N} (+-q)^j f(j).
///
/// The index range is split into contiguous chunks summed concurrently and
/// combined in chunk order; arithmetic is exact, so the result does not
/// depend on `threads`.
template <QReading Q>
typename Q::value_type riemann_sum(const MeasureSpec<Q>& spec, const Integrand<Q>& f, int level,
                                   unsigned threads = 0) {
    using V = typename Q::value_type;
    const std::int64_t count = std::ranges::distance(ball_representatives(spec.domain, level));
    if (threads == 0) threads = detail::default_threads();
    const std::int64_t chunks = std::clamp<std::int64_t>(count / 4096, 1, threads);

    auto partial = [&](std::int64_t lo, std::int64_t hi) {
        V acc = spec.q.constant(0);
        V qj = spec.q.power(BigRational(static_cast<long>(lo)));
        const V base = spec.q.power(1);
        for (std::int64_t j = lo; j < hi; ++j) {
            V term = f(j, qj) * qj;
            if (spec.kind == MeasureKind::fermionic && j % 2 != 0)
                acc = acc - term;
            else
                acc = acc + term;
            if (j + 1 < hi) qj = qj * base;
        }
        return acc;
    };

    V total = spec.q.constant(0);
    if (chunks == 1) {
        total = partial(0, count);
    } else {
        std::vector<std::future<V>> parts;
        for (std::int64_t c = 0; c < chunks; ++c) {
            std::int64_t lo = count * c / chunks, hi = count * (c + 1) / chunks;
            parts.push_back(std::async(std::launch::async, partial, lo, hi));
        }
        for (auto& part : parts) total = total + part.get();
    }
    return total / detail::measure_normalizer(spec, count);
}

/// lim_N S_N: the first N <= max_level with v_p(S_N - S_{N-1}) >= target.
inline IntegrationResult<PadicQ> integrate(const MeasureSpec<PadicQ>& spec, const Integrand<PadicQ>& f,
                                           long target_stability, int max_level, unsigned threads = 0) {
    if (!q_admissible(spec.q.power(1)))
        throw inadmissible_q_error("q is not admissible (need v_p(q - 1) >= 1)");
    if (max_level < 2) throw precondition_error("integration needs at least two levels (N_max >= 2)");
    IntegrationResult<PadicQ> result;
    PadicNumber previous = riemann_sum(spec, f, 1, threads);
    for (int level = 2; level <= max_level; ++level) {
        PadicNumber current = riemann_sum(spec, f, level, threads);
        long stability = (current - previous).valuation().value;
        result.trace.push_back(stability);
        if (stability >= target_stability) {
            result.value = std::move(current);
            result.levels_used = level;
            result.stability = stability;
            return result;
        }
        previous = std::move(current);
    }
    throw non_convergence_error("Riemann sums did not reach stability " + std::to_string(target_stability) +
                                    " within N <= " + std::to_string(max_level),
                                result.trace);
}

/// int q^{ti} dmu_q(t) = (i+1)/[i+1]_q.
template <QReading Q>
typename Q::value_type bosonic_power_moment(long i, const Q& q) {
    using V = typename Q::value_type;
    return V(q.constant(i + 1) / q_bracket(BigRational(i + 1), q));
}

/// int q^{ti} dmu_{-q}(t) = [2]_q/(1 + q^{i+1}).
template <QReading Q>
typename Q::value_type fermionic_power_moment(long i, const Q& q) {
    using V = typename Q::value_type;
    const V one = q.constant(1);
    return V(V(one + q.power(1)) / V(one + q.power(i + 1)));
}

/// Closed form of the level-N fermionic Riemann sum of [x+y]_q^n on Z_p:
/// [2]_q (1/(1-q))^n sum_k C(n,k) (-1)^k q^{xk} (1 + q^{P(k+1)}) / ((1 + q^P)(1 + q^{k+1})), P = p^N.
template <QReading Q>
typename Q::value_type fermionic_finite_rhs(long n, const BigRational& x, int level, std::uint64_t p,
                                            const Q& q) {
    using V = typename Q::value_type;
    const std::int64_t big_p = ball_count(ProfiniteDomain(p, 1), level);
    const V one = q.constant(1);
    const V qp1 = one + q.power(BigRational(static_cast<long>(big_p)));
    V sum = q.constant(0);
    for (long k = 0; k <= n; ++k) {
        const V c = q.constant(BigRational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))));
        const V num = c * q.power(x * k) * V(one + q.power(BigRational(static_cast<long>(big_p * (k + 1)))));
        const V den = qp1 * V(one + q.power(k + 1));
        const V term = num / den;
        if (k % 2 == 0)
            sum = sum + term;
        else
            sum = sum - term;
    }
    const V inv = one / V(one - q.power(1));
    return V(V(one + q.power(1)) * ipow(inv, n) * sum);
}

// Built-in integrand families.

template <QReading Q>
Integrand<Q> integrand_one(const Q& q) {
    typename Q::value_type one = q.constant(1);
    return [one](std::int64_t, const typename Q::value_type&) { return one; };
}

/// t -> q^{ti}
template <QReading Q>
Integrand<Q> integrand_base_power(long i, const Q&) {
    return [i](std::int64_t, const typename Q::value_type& qj) { return ipow(qj, i); };
}

/// y -> [x + y]_q^n
template <QReading Q>
Integrand<Q> integrand_shifted_bracket_pow(long n, const BigRational& x, const Q& q) {
    using V = typename Q::value_type;
    const V one = q.constant(1);
    const V qx = q.power(x);
    const V inv = one / V(one - q.power(1));
    return [one, qx, inv, n](std::int64_t, const V& qj) {
        if (n == 0) return one;
        return ipow(V(V(one - qx * qj) * inv), n);
    };
}

/// y -> [y]_q^n
template <QReading Q>
Integrand<Q> integrand_bracket_pow(long n, const Q& q) {
    return integrand_shifted_bracket_pow(n, BigRational(0), q);
}

} // namespace qvolk
