#pragma once

// F_q(t) = sum K_{n,q} t^n/n! as a truncated series, the coefficient-wise
// partial sums of [2]_q sum_n (-1)^n q^n e^{[n]_q t}, and the q -> 1
// consistency report against 2/(e^t + 1).

#include <cstddef>
#include <type_traits>
#include <vector>

#include "bigrational.hpp"
#include "qfield.hpp"
#include "series.hpp"
#include "special_numbers.hpp"

namespace qvolk {

template <class Q>
concept SeriesReading = std::is_same_v<Q, SymbolicQ> || std::is_same_v<Q, RationalQ>;

/// e^{t/(1-q)} sum_{j<=T} ((1+q)/(1+q^{j+1})) (-1)^j (1/(1-q))^j t^j/j!.
/// Terms j > T only reach orders above T, so the truncation is exact.
template <SeriesReading Q>
TruncatedSeries<typename Q::value_type> f_q_series(const Q& q, int order) {
    using V = typename Q::value_type;
    if (order < 0) throw precondition_error("series order must be nonnegative");
    const V one = q.constant(1);
    const V zero = q.constant(0);
    const V r = one / V(one - q.power(1));
    const V two_q = one + q.power(1);

    auto lin = TruncatedSeries<V>::zero(order, zero);
    if (order >= 1) lin[1] = r;
    auto e = series_exp(lin);

    auto g = TruncatedSeries<V>::zero(order, zero);
    V rj = one;
    for (int j = 0; j <= order; ++j) {
        V c = two_q / V(one + q.power(j + 1)) * rj;
        c = V(BigRational(1) / BigRational(factorial(static_cast<unsigned long>(j))) * c);
        g[static_cast<std::size_t>(j)] = j % 2 == 0 ? c : V(-c);
        rj = rj * r;
    }
    return e * g;
}

struct PartialSum {
    BigRational value;
    BigRational tail_bound;
};

/// [2]_q sum_{n<n_terms} (-1)^n q^n [n]_q^k, with a bound on the omitted tail.
///
/// |[n]_q| <= 1/(1-q) for 0 < q < 1 and |[n]_q| <= 1 for -1 < q < 0, so
/// |tail| <= |[2]_q| B^k |q|^{n_terms}/(1-|q|).
inline PartialSum f_q_coefficient_partial(long k, const BigRational& q, long n_terms) {
    if (k < 0) throw precondition_error("k must be nonnegative");
    if (n_terms < 0) throw precondition_error("n_terms must be nonnegative");
    const BigRational aq = abs(q);
    if (q == 0 || aq >= 1) throw precondition_error("need 0 < |q| < 1");

    const BigRational one_minus_q = 1 - q;
    BigRational sum = 0, qn = 1, bracket = 0;  // q^n, [n]_q
    for (long n = 0; n < n_terms; ++n) {
        BigRational term = qn * pow(bracket, k);
        if (n % 2 == 0)
            sum += term;
        else
            sum -= term;
        bracket += qn;
        qn *= q;
    }
    const BigRational two_q = 1 + q;
    const BigRational b = q > 0 ? BigRational(1 / one_minus_q) : BigRational(1);
    return {two_q * sum, abs(two_q) * pow(b, k) * pow(aq, n_terms) / (1 - aq)};
}

struct LimitRow {
    long n;
    BigRational k_limit;
    BigRational euler;
    bool equal;
};

struct LimitReport {
    /// limit_at_one(K_{n,q}) against E_n.
    std::vector<LimitRow> numbers;
    /// limit_at_one(n! [t^n] F_q) against n! [t^n] 2/(e^t + 1).
    std::vector<LimitRow> series;

    bool all_equal() const {
        for (const auto& r : numbers)
            if (!r.equal) return false;
        for (const auto& r : series)
            if (!r.equal) return false;
        return true;
    }
};

inline LimitReport limit_consistency(int n_max) {
    if (n_max < 0) throw precondition_error("n_max must be nonnegative");
    const SymbolicQ q(1);
    const auto euler = scaled_coefficients(euler_gf(n_max));
    LimitReport report;
    for (int n = 0; n <= n_max; ++n) {
        BigRational l = limit_at_one(k_number(n, q));
        report.numbers.push_back({n, l, euler[static_cast<std::size_t>(n)], l == euler[static_cast<std::size_t>(n)]});
    }
    const auto fq = scaled_coefficients(f_q_series(q, n_max));
    for (int n = 0; n <= n_max; ++n) {
        BigRational l = limit_at_one(fq[static_cast<std::size_t>(n)]);
        report.series.push_back({n, l, euler[static_cast<std::size_t>(n)], l == euler[static_cast<std::size_t>(n)]});
    }
    return report;
}

} // namespace qvolk
