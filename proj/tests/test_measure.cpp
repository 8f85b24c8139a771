#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qvolk/measure.hpp"
#include "qvolk/special_numbers.hpp"

using namespace qvolk;
using oracle::frac;
using oracle::w;

namespace {

const SymbolicQ sym{1};

MeasureSpec<SymbolicQ> symbolic(MeasureKind k, std::uint64_t p, std::int64_t d = 1) {
    return {k, sym, ProfiniteDomain(p, d)};
}

} // namespace

TEST(QBracket, Examples) {
    EXPECT_TRUE(q_bracket(0, sym).is_zero());
    EXPECT_TRUE(oracle::same(q_bracket(3, sym), frac({1, 1, 1})));
    EXPECT_TRUE(oracle::same(q_bracket(BigRational(1, 2), SymbolicQ(2)), frac({1}, {1, 1})));
    EXPECT_THROW(q_bracket(BigRational(1, 2), sym), precondition_error);
    EXPECT_THROW(q_bracket(BigRational(1, 2), PadicQ(6, 5)), precondition_error);
}

TEST(QBracket, NegativeBase) {
    // [3]_{-q} = 1 - q + q^2
    EXPECT_TRUE(oracle::same(q_bracket_neg(3, sym), frac({1, -1, 1})));
}

TEST(BallMeasure, Examples) {
    EXPECT_TRUE(oracle::same(ball_measure(symbolic(MeasureKind::bosonic, 3), 0, 1), frac({1}, {1, 1, 1})));
    // (-q)^1 / [3]_{-q} = -q (1+q)/(1+q^3)
    EXPECT_TRUE(oracle::same(ball_measure(symbolic(MeasureKind::fermionic, 3), 1, 1), frac({0, -1, -1}, {1, 0, 0, 1})));
    EXPECT_THROW(ball_measure(symbolic(MeasureKind::bosonic, 3), 3, 1), precondition_error);
    EXPECT_THROW(ball_measure(symbolic(MeasureKind::bosonic, 3), -1, 1), precondition_error);
}

TEST(BallMeasure, FermionicNeedsOddD) {
    EXPECT_THROW(MeasureSpec<SymbolicQ>(MeasureKind::fermionic, sym, ProfiniteDomain(3, 2)), precondition_error);
    EXPECT_NO_THROW(MeasureSpec<SymbolicQ>(MeasureKind::bosonic, sym, ProfiniteDomain(3, 2)));
}

TEST(BallMeasure, AdditivityAndMass) {
    for (auto kind : {MeasureKind::bosonic, MeasureKind::fermionic})
        for (std::uint64_t p : {3, 5})
            for (std::int64_t d : {1, 7})
                for (int level = 1; level <= 2; ++level) {
                    auto spec = symbolic(kind, p, d);
                    const std::int64_t count = ball_count(spec.domain, level);
                    RationalFunction mass;
                    for (std::int64_t a = 0; a < count; ++a) {
                        RationalFunction sub;
                        for (std::uint64_t i = 0; i < p; ++i)
                            sub = sub + ball_measure(spec, a + static_cast<std::int64_t>(i) * count, level + 1);
                        EXPECT_EQ(sub, ball_measure(spec, a, level));
                        mass = mass + ball_measure(spec, a, level);
                    }
                    EXPECT_EQ(mass, RationalFunction::constant(1));
                }
}

TEST(BallMeasure, FermionicLimit) {
    // mu_{-q}(a + p^N Z_p) -> ([2]_q/2)(-1)^a q^a with the gap controlled by v(q^{p^N} - 1).
    PadicQ q(6, 5, 40);
    MeasureSpec<PadicQ> spec(MeasureKind::fermionic, q, ProfiniteDomain(5, 1));
    for (long a : {0, 1, 3}) {
        PadicNumber target = q.constant(BigRational(7 * (a % 2 ? -1 : 1), 2)) * q.power(a);
        long last = -1;
        for (int level = 1; level <= 4; ++level) {
            long gap = (ball_measure(spec, a, level) - target).valuation().value;
            long bound = (q.power(ball_count(spec.domain, level)) - q.constant(1)).valuation().value;
            EXPECT_GE(gap, bound);
            EXPECT_GT(gap, last);
            last = gap;
        }
    }
}

TEST(RiemannSum, ConstantOneHasMassOne) {
    for (auto kind : {MeasureKind::bosonic, MeasureKind::fermionic})
        for (int level = 1; level <= 3; ++level)
            EXPECT_EQ(riemann_sum(symbolic(kind, 3), integrand_one(sym), level), RationalFunction::constant(1));
}

TEST(RiemannSum, BosonicBracketWrittenOut) {
    // (1/[3]) (q [1] + q^2 [2]) = (q + q^2 + q^3)/(1 + q + q^2) = q
    auto s = riemann_sum(symbolic(MeasureKind::bosonic, 3), integrand_bracket_pow(1, sym), 1);
    auto expected = (w(1) + w(2) * frac({1, 1})) / frac({1, 1, 1});
    EXPECT_TRUE(oracle::same(s, expected));
}

TEST(RiemannSum, ThreadCountDoesNotChangeResult) {
    PadicQ q(6, 5);
    MeasureSpec<PadicQ> spec(MeasureKind::fermionic, q, ProfiniteDomain(5, 1));
    auto f = integrand_bracket_pow(3, q);
    auto one = riemann_sum(spec, f, 6, 1);
    EXPECT_EQ(one, riemann_sum(spec, f, 6, 3));
    EXPECT_EQ(one, riemann_sum(spec, f, 6, 8));
}

TEST(RiemannSum, FiniteLevelClosedForm) {
    for (int level : {1, 2})
        for (long x : {0, 1, 2})
            for (long n = 0; n <= 4; ++n) {
                auto lhs = riemann_sum(symbolic(MeasureKind::fermionic, 3), integrand_shifted_bracket_pow(n, x, sym), level);
                EXPECT_EQ(lhs, fermionic_finite_rhs(n, x, level, 3, sym)) << "N=" << level << " n=" << n << " x=" << x;
            }
}

TEST(RiemannSum, FiniteLevelClosedFormNZero) {
    EXPECT_EQ(fermionic_finite_rhs(0, 0, 2, 5, sym), RationalFunction::constant(1));
}

TEST(RiemannSum, FiniteLevelTendsToClosedPolynomial) {
    // As N grows the level-N form approaches K_{n,q}(x) p-adically.
    PadicQ q(6, 5, 40);
    for (long n = 1; n <= 3; ++n) {
        auto limit = k_polynomial(n, 1, q, PolyForm::closed);
        long last = -1;
        for (int level = 1; level <= 4; ++level) {
            long v = (fermionic_finite_rhs(n, 1, level, 5, q) - limit).valuation().value;
            EXPECT_GT(v, last);
            last = v;
        }
    }
}

TEST(Integrate, ConstantOneConvergesImmediately) {
    PadicQ q(6, 5);
    MeasureSpec<PadicQ> spec(MeasureKind::fermionic, q, ProfiniteDomain(5, 1));
    auto r = integrate(spec, integrand_one(q), 6, 8);
    EXPECT_EQ(r.levels_used, 2);
    EXPECT_TRUE(padic_agree(r.value, q.constant(1), 20));
}

TEST(Integrate, FermionicCubeMatchesSymbolicK3) {
    PadicQ q(6, 5);
    MeasureSpec<PadicQ> spec(MeasureKind::fermionic, q, ProfiniteDomain(5, 1));
    auto r = integrate(spec, integrand_bracket_pow(3, q), 6, 8);
    BigRational k3 = k_number(3, sym).evaluate(6);
    EXPECT_EQ(r.value.truncated(6), q.constant(k3).truncated(6));
    EXPECT_TRUE(std::is_sorted(r.trace.begin(), r.trace.end()));
}

TEST(Integrate, BosonicBracketMatchesBetaOne) {
    PadicQ q(6, 5);
    MeasureSpec<PadicQ> spec(MeasureKind::bosonic, q, ProfiniteDomain(5, 1));
    auto r = integrate(spec, integrand_bracket_pow(1, q), 5, 8);
    EXPECT_TRUE(padic_agree(r.value, q.constant(BigRational(-1, 7)), r.stability));
}

TEST(Integrate, DifferenceValuationsNondecrease) {
    PadicQ q(6, 5);
    for (auto kind : {MeasureKind::bosonic, MeasureKind::fermionic})
        for (long n = 1; n <= 4; ++n)
            for (long x : {0, 1}) {
                MeasureSpec<PadicQ> spec(kind, q, ProfiniteDomain(5, 1));
                try {
                    integrate(spec, integrand_shifted_bracket_pow(n, x, q), 99, 7);
                    FAIL() << "stability 99 cannot be reached";
                } catch (const non_convergence_error& e) {
                    EXPECT_EQ(e.trace.size(), 6u);
                    EXPECT_TRUE(std::is_sorted(e.trace.begin(), e.trace.end()));
                }
            }
}

TEST(Integrate, Errors) {
    PadicQ q(6, 5);
    MeasureSpec<PadicQ> spec(MeasureKind::fermionic, q, ProfiniteDomain(5, 1));
    EXPECT_THROW(integrate(spec, integrand_bracket_pow(2, q), 40, 3), non_convergence_error);
    EXPECT_THROW(PadicQ(2, 5), inadmissible_q_error);
    EXPECT_THROW(integrate(spec, integrand_one(q), 1, 1), precondition_error);
}

TEST(Moments, ClosedForms) {
    EXPECT_EQ(bosonic_power_moment(0, sym), RationalFunction::constant(1));
    EXPECT_TRUE(oracle::same(bosonic_power_moment(1, sym), frac({2}, {1, 1})));
    EXPECT_EQ(fermionic_power_moment(0, sym), RationalFunction::constant(1));
    EXPECT_TRUE(oracle::same(fermionic_power_moment(1, sym), frac({1, 1}, {1, 0, 1})));
}

TEST(Moments, MatchRiemannSumLimits) {
    PadicQ q(6, 5);
    for (auto kind : {MeasureKind::bosonic, MeasureKind::fermionic})
        for (long i = 0; i <= 3; ++i) {
            MeasureSpec<PadicQ> spec(kind, q, ProfiniteDomain(5, 1));
            auto r = integrate(spec, integrand_base_power(i, q), 6, 8);
            auto m = kind == MeasureKind::bosonic ? bosonic_power_moment(i, q) : fermionic_power_moment(i, q);
            EXPECT_TRUE(padic_agree(r.value, m, r.stability)) << to_string(kind) << " i=" << i;
        }
}

TEST(QSpec, Parsing) {
    EXPECT_TRUE(std::holds_alternative<SymbolicQ>(parse_q_spec("sym")));
    EXPECT_EQ(std::get<SymbolicQ>(parse_q_spec("sym:6")).root_order, 6);
    EXPECT_TRUE(std::holds_alternative<RationalQ>(parse_q_spec("1/2")));
    EXPECT_TRUE(std::holds_alternative<PadicQ>(parse_q_spec("6", 5)));
    auto p = std::get<PadicQ>(parse_q_spec("padic:5:6:12"));
    EXPECT_EQ(p.precision, 12);
    EXPECT_EQ(p.prime(), 5u);
    EXPECT_THROW(parse_q_spec("1"), precondition_error);
    EXPECT_THROW(parse_q_spec("padic:5:2"), inadmissible_q_error);
    EXPECT_THROW(parse_q_spec("sym:x"), precondition_error);
}
