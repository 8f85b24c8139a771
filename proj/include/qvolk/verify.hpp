#pragma once

// Identity-verification suites. Each suite enumerates its cases in a fixed
// order, runs them on a small worker pool and reports per-case pass/fail in
// enumeration order, so the report is identical for any thread count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "dirichlet.hpp"
#include "generating_functions.hpp"
#include "json_io.hpp"
#include "measure.hpp"
#include "special_numbers.hpp"

namespace qvolk::verify {

using json = json_io::json;

struct CaseResult {
    json params;
    bool pass = false;
    std::string note;
};

struct SuiteReport {
    std::string name;
    std::vector<CaseResult> cases;

    bool passed() const {
        return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
    }
};

struct Options {
    /// Distribution-relation moduli (odd).
    std::vector<long> m = {1, 3, 5};
    /// Largest n for the limit suite.
    int n_max = 12;
    unsigned threads = 0;
};

using Case = std::function<CaseResult()>;

/// Runs every case; the first exception (in case order) is rethrown.
inline std::vector<CaseResult> run_cases(const std::vector<Case>& cases, unsigned threads = 0) {
    std::vector<CaseResult> out(cases.size());
    std::vector<std::exception_ptr> errors(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) {
            try {
                out[i] = cases[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(1, cases.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

namespace detail {

inline int root_order_for(const BigRational& x, long m = 1) {
    return static_cast<int>(m * x.get_den().get_si());
}

inline CaseResult check(json params, bool pass, std::string note = {}) {
    return {std::move(params), pass, std::move(note)};
}

} // namespace detail

/// Additivity and total mass of both measures, and the fermionic ball
/// measure approaching ([2]_q/2)(-1)^a q^a p-adically.
inline SuiteReport suite_measure(const Options& opt = {}) {
    std::vector<Case> cases;
    for (auto kind : {MeasureKind::bosonic, MeasureKind::fermionic})
        for (std::uint64_t p : {3, 5})
            for (std::uint64_t d : {1, 3})
                for (int level = 1; level <= 3; ++level) {
                    if (d % p == 0) continue;  // X_d needs gcd(d, p) = 1
                    cases.push_back([=] {
                        MeasureSpec<SymbolicQ> spec(kind, SymbolicQ(1), ProfiniteDomain(p, d));
                        const std::int64_t count = ball_count(spec.domain, level);
                        // Every ball at the lowest level, a spread sample above it.
                        const std::int64_t stride = std::max<std::int64_t>(1, count / 7);
                        bool additive = true;
                        for (std::int64_t a = 0; a < count && additive; a += stride) {
                            RationalFunction sub(1);
                            for (std::uint64_t i = 0; i < p; ++i)
                                sub = sub + ball_measure(spec, a + static_cast<std::int64_t>(i) * count, level + 1);
                            additive = sub == ball_measure(spec, a, level);
                        }
                        RationalFunction mass(1);
                        for (std::int64_t a = 0; a < count; ++a) mass = mass + ball_measure(spec, a, level);
                        json params{{"check", "additivity+mass"}, {"kind", to_string(kind)}, {"p", p}, {"d", d},
                                    {"N", level}};
                        return detail::check(params, additive && mass == RationalFunction::constant(1, 1));
                    });
                }
    for (std::uint64_t p : {3, 5})
        for (long a : {0, 1, 2}) {
            cases.push_back([=] {
                const BigRational qv(static_cast<long>(p + 1));
                PadicQ q(qv, p, 40);
                MeasureSpec<PadicQ> spec(MeasureKind::fermionic, q, ProfiniteDomain(p, 1));
                PadicNumber target = q.power(a) * q.constant(BigRational(1, 2)) * PadicNumber(q.constant(1) + q.power(1));
                if (a % 2) target = -target;
                bool ok = true;
                long last = -1;
                json gaps = json::array();
                for (int level = 1; level <= 4; ++level) {
                    long gap = (ball_measure(spec, a, level) - target).valuation().value;
                    long bound = (q.power(static_cast<long>(ball_count(spec.domain, level))) - q.constant(1))
                                     .valuation()
                                     .value;
                    ok = ok && gap >= bound && gap > last;
                    last = gap;
                    gaps.push_back(gap);
                }
                json params{{"check", "fermionic-limit"}, {"p", p}, {"q", to_string(qv)}, {"a", a}, {"valuations", gaps}};
                return detail::check(params, ok);
            });
        }
    return {"measure", run_cases(cases, opt.threads)};
}

/// Expansion and closed forms of K_{n,q}(x) coincide.
inline SuiteReport suite_eq3_eq5(const Options& opt = {}) {
    std::vector<Case> cases;
    for (const BigRational& x : {BigRational(0), BigRational(1), BigRational(2), BigRational(1, 2), BigRational(1, 3)})
        for (long n = 0; n <= 8; ++n)
            cases.push_back([=] {
                SymbolicQ q(detail::root_order_for(x));
                bool ok = k_polynomial(n, x, q, PolyForm::expansion) == k_polynomial(n, x, q, PolyForm::closed);
                return detail::check(json{{"n", n}, {"x", to_string(x)}}, ok);
            });
    return {"eq3_eq5", run_cases(cases, opt.threads)};
}

/// Fermionic Riemann sums of [x+y]^n at finite N equal the closed finite-N form.
inline SuiteReport suite_eq4(const Options& opt = {}) {
    std::vector<Case> cases;
    const std::uint64_t p = 3;
    for (int level : {1, 2})
        for (long x : {0, 1})
            for (long n = 0; n <= 4; ++n)
                cases.push_back([=] {
                    SymbolicQ q(1);
                    MeasureSpec<SymbolicQ> spec(MeasureKind::fermionic, q, ProfiniteDomain(p, 1));
                    auto lhs = riemann_sum(spec, integrand_shifted_bracket_pow(n, BigRational(x), q), level, 1);
                    auto rhs = fermionic_finite_rhs(n, BigRational(x), level, p, q);
                    return detail::check(json{{"p", p}, {"N", level}, {"n", n}, {"x", x}}, lhs == rhs);
                });
    return {"eq4", run_cases(cases, opt.threads)};
}

/// K_{n,q}(x) against the odd-m distribution sum.
inline SuiteReport suite_eq7(const Options& opt = {}) {
    for (long m : opt.m)
        if (m < 1 || m % 2 == 0) throw precondition_error("the distribution relation needs odd positive m (got " +
                                                          std::to_string(m) + ")");
    std::vector<Case> cases;
    for (long m : opt.m)
        for (const BigRational& x : {BigRational(0), BigRational(1, 3)})
            for (long n = 0; n <= 6; ++n)
                cases.push_back([=] {
                    SymbolicQ q(detail::root_order_for(x, m));
                    bool ok = k_polynomial(n, x, q, PolyForm::closed) == k_distribution_rhs(n, x, m, q);
                    return detail::check(json{{"m", m}, {"n", n}, {"x", to_string(x)}}, ok);
                });
    return {"eq7", run_cases(cases, opt.threads)};
}

/// Twisted numbers: Riemann sums over X_f against the closed form, and the
/// trivial character reducing to K_{n,q}.
inline SuiteReport suite_eq8_eq10(const Options& opt = {}) {
    std::vector<Case> cases;
    const auto quadratic = enumerate_characters(3).at(1);
    for (long n = 0; n <= 4; ++n)
        cases.push_back([=] {
            PadicQ q(6, 5);
            auto integral = k_chi_integral(n, quadratic, q, {5, 7, 1});
            auto closed = k_chi_closed(n, quadratic, q);
            json params{{"chi", quadratic.id()}, {"p", 5}, {"q", "6"}, {"n", n}, {"N_used", integral.levels_used}};
            return detail::check(params, padic_agree(integral.value, closed, 5));
        });
    const auto trivial = enumerate_characters(1).at(0);
    for (long n = 0; n <= 4; ++n)
        cases.push_back([=] {
            SymbolicQ q(1);
            RationalFunction v;
            bool ok = k_chi_closed(n, trivial, q).in_base_field(&v) && v == k_number(n, q);
            return detail::check(json{{"chi", trivial.id()}, {"n", n}, {"q", "sym"}}, ok);
        });
    return {"eq8_eq10", run_cases(cases, opt.threads)};
}

/// Both displayed forms of beta_{n,q}(x), the small closed values, and the
/// bosonic integral at integer x.
inline SuiteReport suite_beta_forms(const Options& opt = {}) {
    std::vector<Case> cases;
    for (const BigRational& x : {BigRational(0), BigRational(1), BigRational(1, 2)})
        for (long n = 0; n <= 6; ++n)
            cases.push_back([=] {
                SymbolicQ q(detail::root_order_for(x));
                bool ok = beta_polynomial(n, x, q, PolyForm::expansion) == beta_polynomial(n, x, q, PolyForm::closed);
                return detail::check(json{{"n", n}, {"x", to_string(x)}}, ok);
            });
    cases.push_back([] {
        SymbolicQ q(1);
        const auto one = q.constant(1);
        bool ok = beta_number(1, q) == -(one / (one + q.power(1)));
        return detail::check(json{{"check", "beta_1 = -1/(1+q)"}}, ok);
    });
    cases.push_back([] {
        SymbolicQ q(1);
        bool ok = beta_number(2, q) == q.power(1) / (q_bracket(2, q) * q_bracket(3, q));
        return detail::check(json{{"check", "beta_2 = q/([2][3])"}}, ok);
    });
    for (long x : {0, 1})
        for (long n = 0; n <= 3; ++n)
            cases.push_back([=] {
                PadicQ q(6, 5);
                auto r = beta_polynomial_integral(n, BigRational(x), q, {5, 8, 1});
                auto closed = beta_polynomial(n, BigRational(x), q, PolyForm::closed);
                json params{{"check", "integral"}, {"p", 5}, {"q", "6"}, {"n", n}, {"x", x}, {"N_used", r.levels_used}};
                return detail::check(params, padic_agree(r.value, closed, r.stability));
            });
    return {"beta_forms", run_cases(cases, opt.threads)};
}

/// q -> 1: K_{n,q} -> E_n and F_q -> 2/(e^t+1) decide the verdict; the beta
/// rows against B_n are informational.
inline SuiteReport suite_limits(const Options& opt = {}) {
    SuiteReport report{"limits", {}};
    const auto lim = limit_consistency(opt.n_max);
    for (const auto& row : lim.numbers)
        report.cases.push_back(detail::check(json{{"check", "K"}, {"n", row.n}, {"K_limit", to_string(row.k_limit)},
                                                  {"E_n", to_string(row.euler)}},
                                             row.equal));
    for (const auto& row : lim.series)
        report.cases.push_back(detail::check(json{{"check", "F_q coefficient"}, {"n", row.n},
                                                  {"limit", to_string(row.k_limit)}, {"E_n", to_string(row.euler)}},
                                             row.equal));
    const int b_max = std::min(opt.n_max, 10);
    const auto bern = classical_bernoulli(b_max);
    for (int n = 0; n <= b_max; ++n) {
        BigRational l = limit_at_one(beta_number(n, SymbolicQ(1)));
        report.cases.push_back(detail::check(json{{"check", "beta (reported)"}, {"n", n}, {"beta_limit", to_string(l)},
                                                  {"B_n", to_string(bern[static_cast<std::size_t>(n)])},
                                                  {"equal", l == bern[static_cast<std::size_t>(n)]}},
                                             true));
    }
    return report;
}

/// n! [t^n] F_q = K_{n,q}, and the coefficient-wise partial sums at rational q.
inline SuiteReport suite_genfun(const Options& opt = {}) {
    std::vector<Case> cases;
    cases.push_back([] {
        SymbolicQ q(1);
        auto c = scaled_coefficients(f_q_series(q, 10));
        bool ok = true;
        for (long n = 0; n <= 10; ++n) ok = ok && c[static_cast<std::size_t>(n)] == k_number(n, q);
        return detail::check(json{{"check", "F_q coefficients"}, {"T", 10}}, ok);
    });
    for (const BigRational& qv : {BigRational(1, 2), BigRational(1, 3)})
        for (long k = 0; k <= 6; ++k)
            cases.push_back([=] {
                auto ps = f_q_coefficient_partial(k, qv, 200);
                BigRational exact = k_number(k, RationalQ(qv));
                bool ok = abs(ps.value - exact) <= ps.tail_bound;
                return detail::check(json{{"check", "partial sum"}, {"q", to_string(qv)}, {"k", k}, {"terms", 200}},
                                     ok);
            });
    return {"genfun", run_cases(cases, opt.threads)};
}

/// p-adic integrals against symbolic values evaluated at q = 6, p = 5.
inline SuiteReport suite_integral(const Options& opt = {}) {
    std::vector<Case> cases;
    for (long n = 0; n <= 4; ++n)
        for (long x : {0, 1, 2})
            cases.push_back([=] {
                PadicQ q(6, 5);
                auto r = k_polynomial_integral(n, BigRational(x), q, {6, 8, 1});
                auto symbolic = k_polynomial(n, BigRational(x), SymbolicQ(1), PolyForm::closed);
                PadicNumber expected = q.constant(symbolic.evaluate(6));
                bool nondecreasing = std::is_sorted(r.trace.begin(), r.trace.end());
                json params{{"n", n}, {"x", x}, {"N_used", r.levels_used}, {"trace", r.trace}};
                return detail::check(params, padic_agree(r.value, expected, r.stability) && nondecreasing);
            });
    for (auto kind : {MeasureKind::bosonic, MeasureKind::fermionic})
        for (long i = 0; i <= 3; ++i)
            cases.push_back([=] {
                PadicQ q(6, 5);
                MeasureSpec<PadicQ> spec(kind, q, ProfiniteDomain(5, 1));
                auto r = integrate(spec, integrand_base_power(i, q), 6, 8, 1);
                PadicNumber m = kind == MeasureKind::bosonic ? bosonic_power_moment(i, q) : fermionic_power_moment(i, q);
                return detail::check(json{{"check", "moment"}, {"kind", to_string(kind)}, {"i", i}},
                                     padic_agree(r.value, m, r.stability));
            });
    return {"integral", run_cases(cases, opt.threads)};
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"measure",  "eq3_eq5", "eq4",    "eq7",     "eq8_eq10",
                                                   "beta_forms", "limits", "genfun", "integral"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, const Options& opt = {}) {
    if (name == "measure") return suite_measure(opt);
    if (name == "eq3_eq5") return suite_eq3_eq5(opt);
    if (name == "eq4") return suite_eq4(opt);
    if (name == "eq7") return suite_eq7(opt);
    if (name == "eq8_eq10") return suite_eq8_eq10(opt);
    if (name == "beta_forms") return suite_beta_forms(opt);
    if (name == "limits") return suite_limits(opt);
    if (name == "genfun") return suite_genfun(opt);
    if (name == "integral") return suite_integral(opt);
    throw precondition_error("unknown suite '" + name + "'");
}

inline json to_json(const SuiteReport& s) {
    json j;
    j["suite"] = s.name;
    j["pass"] = s.passed();
    j["cases"] = json::array();
    for (const auto& c : s.cases) {
        json row = c.params;
        row["pass"] = c.pass;
        if (!c.note.empty()) row["note"] = c.note;
        j["cases"].push_back(std::move(row));
    }
    return j;
}

} // namespace qvolk::verify
