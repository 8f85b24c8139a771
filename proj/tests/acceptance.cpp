// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "qvolk/qvolk.hpp"

using namespace qvolk;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs >= limit_s) {
        o.pass = false;
        o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    if (!o.pass) ++failures;
    std::printf("%-4s %2d  %-38s %7.2fs", o.pass ? "PASS" : "FAIL", id, title, secs);
    if (limit_s > 0) std::printf(" (limit %.0fs)", limit_s);
    if (!o.detail.empty()) std::printf("  %s", o.detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
}

int root_order_for(const BigRational& x, long m = 1) {
    return static_cast<int>(x.get_den().get_ui()) * static_cast<int>(m);
}

} // namespace

int main() {
    criterion(1, "K(x) expansion == closed form", 5, [] {
        for (const BigRational& x : {BigRational(0), BigRational(1), BigRational(2), BigRational(1, 2), BigRational(1, 3)})
            for (long n = 0; n <= 8; ++n) {
                SymbolicQ q(root_order_for(x));
                if (k_polynomial(n, x, q, PolyForm::expansion) != k_polynomial(n, x, q, PolyForm::closed))
                    return Outcome{false, "n=" + std::to_string(n) + " x=" + to_string(x)};
            }
        return Outcome{true, "45 cases"};
    });

    criterion(2, "distribution relation, odd m", 10, [] {
        for (long m : {1, 3, 5})
            for (const BigRational& x : {BigRational(0), BigRational(1, 3)})
                for (long n = 0; n <= 6; ++n) {
                    SymbolicQ q(root_order_for(x, m));
                    if (k_polynomial(n, x, q, PolyForm::closed) != k_distribution_rhs(n, x, m, q))
                        return Outcome{false, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " x=" + to_string(x)};
                }
        return Outcome{true, "42 cases"};
    });

    criterion(3, "finite-N fermionic sums, p=3", 0, [] {
        SymbolicQ q(1);
        MeasureSpec<SymbolicQ> spec(MeasureKind::fermionic, q, ProfiniteDomain(3, 1));
        for (int level : {1, 2})
            for (long x : {0, 1})
                for (long n = 0; n <= 4; ++n)
                    if (riemann_sum(spec, integrand_shifted_bracket_pow(n, BigRational(x), q), level) !=
                        fermionic_finite_rhs(n, BigRational(x), level, 3, q))
                        return Outcome{false, "N=" + std::to_string(level) + " n=" + std::to_string(n)};
        return Outcome{true, "20 cases"};
    });

    criterion(4, "q -> 1 limits", 0, [] {
        const auto report = limit_consistency(12);
        for (const auto& row : report.numbers)
            if (!row.equal) return Outcome{false, "K limit differs at n=" + std::to_string(row.n)};
        const auto bern = classical_bernoulli(10);
        std::string beta = "beta vs B_n:";
        for (long n = 0; n <= 10; ++n) {
            BigRational l = limit_at_one(beta_number(n, SymbolicQ(1)));
            beta += " " + std::to_string(n) + (l == bern[static_cast<std::size_t>(n)] ? "=" : "!=");
        }
        return Outcome{true, "K_n -> E_n for n<=12; " + beta};
    });

    criterion(5, "n! [t^n] F_q == K_n, n<=10", 0, [] {
        SymbolicQ q(1);
        const auto c = scaled_coefficients(f_q_series(q, 10));
        for (long n = 0; n <= 10; ++n)
            if (c[static_cast<std::size_t>(n)] != k_number(n, q)) return Outcome{false, "n=" + std::to_string(n)};
        return Outcome{true, ""};
    });

    criterion(6, "partial sums at q=1/2 within tail", 2, [] {
        const BigRational q(1, 2);
        const BigRational tiny = BigRational(1) / BigRational(BigInt(1) << 100);
        for (long k = 0; k <= 6; ++k) {
            const auto ps = f_q_coefficient_partial(k, q, 200);
            if (ps.tail_bound >= tiny) return Outcome{false, "tail bound too large at k=" + std::to_string(k)};
            if (abs(ps.value - k_number(k, RationalQ(q))) > ps.tail_bound)
                return Outcome{false, "k=" + std::to_string(k)};
        }
        return Outcome{true, "k<=6, 200 terms"};
    });

    criterion(7, "fermionic integral of [y]^3, p=5 q=6", 30, [] {
        PadicQ q(6, 5);
        MeasureSpec<PadicQ> spec(MeasureKind::fermionic, q, ProfiniteDomain(5, 1));
        const auto r = integrate(spec, integrand_bracket_pow(3, q), 6, 8);
        const PadicNumber expected = q.constant(k_number(3, SymbolicQ(1)).evaluate(6));
        std::string trace = "N_used=" + std::to_string(r.levels_used) + " trace=";
        for (long t : r.trace) trace += std::to_string(t) + ",";
        if (!std::is_sorted(r.trace.begin(), r.trace.end())) return Outcome{false, trace + " not nondecreasing"};
        return Outcome{padic_agree(r.value, expected, 6), trace};
    });

    criterion(8, "quadratic twist mod 3, p=5 q=6", 60, [] {
        const auto chi = enumerate_characters(3).at(1);
        PadicQ q(6, 5);
        std::string used = "N_used=";
        for (long n = 0; n <= 4; ++n) {
            const auto r = k_chi_integral(n, chi, q, {5, 7});
            used += std::to_string(r.levels_used) + ",";
            if (!padic_agree(r.value, k_chi_closed(n, chi, q), 5)) return Outcome{false, "n=" + std::to_string(n)};
        }
        return Outcome{true, used};
    });

    criterion(9, "measure additivity, mass, limit", 0, [] {
        const auto report = verify::suite_measure();
        return Outcome{report.passed(), std::to_string(report.cases.size()) + " cases; (p=3, d=3) not coprime, skipped"};
    });

    criterion(10, "beta forms and beta_1, beta_2", 0, [] {
        for (const BigRational& x : {BigRational(0), BigRational(1), BigRational(1, 2)})
            for (long n = 0; n <= 6; ++n) {
                SymbolicQ q(root_order_for(x));
                if (beta_polynomial(n, x, q, PolyForm::expansion) != beta_polynomial(n, x, q, PolyForm::closed))
                    return Outcome{false, "n=" + std::to_string(n) + " x=" + to_string(x)};
            }
        SymbolicQ q(1);
        const RationalFunction one = q.constant(1);
        if (beta_number(1, q) != -(one / (one + q.power(1)))) return Outcome{false, "beta_1"};
        if (beta_number(2, q) != q.power(1) / (q_bracket(2, q) * q_bracket(3, q))) return Outcome{false, "beta_2"};
        return Outcome{true, ""};
    });

    std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
