#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qvolk/generating_functions.hpp"

using namespace qvolk;
using oracle::frac;

namespace {

TruncatedSeries<BigRational> series(std::vector<BigRational> c) { return TruncatedSeries<BigRational>(std::move(c)); }

} // namespace

TEST(Series, Arithmetic) {
    auto a = series({1, 1, 0}), b = series({1, -1, 0});
    EXPECT_EQ(series_arith(a, b, SeriesOp::mul), series({1, 0, -1}));
    EXPECT_EQ(series_arith(a, TruncatedSeries<BigRational>::zero(2, 0), SeriesOp::add), a);
    auto e = exp_t(4);
    auto doubled = series_arith(e, series({2, 0, 0, 0, 0}), SeriesOp::scale);
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(doubled[n], 2 * e[n]);
    EXPECT_THROW(a + exp_t(3), precondition_error);
}

TEST(Series, Exp) {
    EXPECT_EQ(series_exp(TruncatedSeries<BigRational>::zero(3, 0)), series({1, 0, 0, 0}));
    EXPECT_EQ(series_exp(series({0, 1, 0, 0})), series({1, 1, BigRational(1, 2), BigRational(1, 6)}));
    auto plus = series_exp(series({0, 1, 0, 0, 0, 0, 0})), minus = series_exp(series({0, -1, 0, 0, 0, 0, 0}));
    EXPECT_EQ(plus * minus, series({1, 0, 0, 0, 0, 0, 0}));
    EXPECT_THROW(series_exp(series({1, 0})), precondition_error);
}

TEST(Series, Inverse) {
    EXPECT_EQ(series_inverse(series({1})), series({1}));
    EXPECT_EQ(series_inverse(series({1, 1, 0})), series({1, -1, 1}));
    EXPECT_THROW(series_inverse(series({0, 1})), precondition_error);
    for (int T : {1, 5, 9}) {
        std::vector<BigRational> t(static_cast<std::size_t>(T) + 1, 0);
        t[1] = 1;
        auto e = series_exp(series(t));
        for (auto& c : t) c = -c;
        EXPECT_EQ(series_inverse(e), series_exp(series(t)));
    }
}

TEST(Series, EulerGf) {
    auto s = euler_gf(4);
    EXPECT_EQ(s[0], 1);
    auto e = scaled_coefficients(s);
    EXPECT_EQ(e, (std::vector<BigRational>{1, BigRational(-1, 2), 0, BigRational(1, 4), 0}));
    EXPECT_EQ(scaled_coefficients(euler_gf(14)), oracle::euler(14));
}

TEST(Series, RationalFunctionCoefficients) {
    auto x = RationalFunction::w_power(1);
    TruncatedSeries<RationalFunction> s(std::vector<RationalFunction>{RationalFunction::constant(0), x, RationalFunction()});
    auto e = series_exp(s);
    EXPECT_EQ(e[2], BigRational(1, 2) * (x * x));
}

TEST(Fq, LowCoefficients) {
    SymbolicQ q(1);
    auto c = scaled_coefficients(f_q_series(q, 4));
    EXPECT_EQ(c[0], RationalFunction::constant(1));
    EXPECT_TRUE(oracle::same(c[1], frac({0, -1}, {1, 0, 1})));
}

TEST(Fq, CoefficientsAreK) {
    SymbolicQ q(1);
    auto c = scaled_coefficients(f_q_series(q, 10));
    for (long n = 0; n <= 10; ++n) EXPECT_EQ(c[static_cast<std::size_t>(n)], k_number(n, q)) << n;
}

TEST(Fq, RationalQ) {
    RationalQ q(BigRational(1, 3));
    auto c = scaled_coefficients(f_q_series(q, 6));
    for (long n = 0; n <= 6; ++n) EXPECT_EQ(c[static_cast<std::size_t>(n)], k_number(n, q));
    EXPECT_THROW(RationalQ(1), precondition_error);
}

TEST(Partial, Examples) {
    auto k0 = f_q_coefficient_partial(0, BigRational(1, 2), 60);
    EXPECT_LE(abs(k0.value - 1), k0.tail_bound);
    auto k1 = f_q_coefficient_partial(1, BigRational(1, 2), 120);
    EXPECT_LE(abs(k1.value - BigRational(-2, 5)), k1.tail_bound);
    EXPECT_LT(k1.tail_bound, pow(BigRational(2), -100));
    auto empty = f_q_coefficient_partial(3, BigRational(1, 2), 0);
    EXPECT_EQ(empty.value, 0);
    EXPECT_EQ(empty.tail_bound, BigRational(3, 2) * 8 * 2);
}

TEST(Partial, WithinTailBound) {
    for (const BigRational& q : {BigRational(1, 2), BigRational(1, 3), BigRational(-1, 2), BigRational(-2, 3)})
        for (long k = 0; k <= 6; ++k) {
            auto ps = f_q_coefficient_partial(k, q, 200);
            EXPECT_LE(abs(ps.value - k_number(k, RationalQ(q))), ps.tail_bound) << to_string(q) << " k=" << k;
        }
}

TEST(Partial, Preconditions) {
    EXPECT_THROW(f_q_coefficient_partial(1, 1, 10), precondition_error);
    EXPECT_THROW(f_q_coefficient_partial(1, 0, 10), precondition_error);
    EXPECT_THROW(f_q_coefficient_partial(1, BigRational(-3, 2), 10), precondition_error);
}

TEST(Limits, Consistency) {
    auto r = limit_consistency(3);
    ASSERT_EQ(r.numbers.size(), 4u);
    std::vector<BigRational> got;
    for (const auto& row : r.numbers) got.push_back(row.k_limit);
    EXPECT_EQ(got, (std::vector<BigRational>{1, BigRational(-1, 2), 0, BigRational(1, 4)}));
    EXPECT_EQ(r.series.at(1).k_limit, BigRational(-1, 2));
    EXPECT_TRUE(limit_consistency(12).all_equal());
}
