#include <map>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qvolk/dirichlet.hpp"

using namespace qvolk;

namespace {

/// Characters evaluated as exponents k/L in Q/Z, for exact comparison.
BigRational angle(const CharacterValue& v) { return make_rational(v.exponent, v.order); }

} // namespace

TEST(UnitGroup, Examples) {
    auto g3 = unit_group_structure(3);
    ASSERT_EQ(g3.factors.size(), 1u);
    EXPECT_EQ(g3.factors[0], (CyclicFactor{2, 2}));
    EXPECT_TRUE(unit_group_structure(1).factors.empty());
    auto g15 = unit_group_structure(15);
    std::multiset<std::int64_t> orders;
    for (auto& f : g15.factors) orders.insert(f.order);
    EXPECT_EQ(orders, (std::multiset<std::int64_t>{2, 4}));
}

TEST(UnitGroup, OrdersMatchBruteForce) {
    for (std::int64_t f = 1; f <= 40; ++f) {
        auto g = unit_group_structure(f);
        EXPECT_EQ(g.size(), oracle::phi(f)) << f;
        for (const auto& c : g.factors) {
            std::int64_t k = 1;
            while (oracle::powmod(c.generator, k, f) != 1 % f) ++k;
            EXPECT_EQ(k, c.order) << "f=" << f << " g=" << c.generator;
        }
    }
}

TEST(Characters, Counts) {
    EXPECT_EQ(enumerate_characters(1).size(), 1u);
    EXPECT_EQ(enumerate_characters(3).size(), 2u);
    std::vector<std::int64_t> orders;
    for (const auto& c : enumerate_characters(5)) orders.push_back(c.value_order());
    EXPECT_EQ(orders, (std::vector<std::int64_t>{1, 4, 2, 4}));
}

TEST(Characters, QuadraticModThree) {
    auto chi = enumerate_characters(3).at(1);
    EXPECT_EQ(chi.value(1).sign(), 1);
    EXPECT_EQ(chi.value(2).sign(), -1);
    EXPECT_EQ(chi.value(0).sign(), 0);
    EXPECT_EQ(std::get<BigRational>(character_value(chi, 2)), -1);
    EXPECT_EQ(std::get<BigRational>(character_value(chi, 3)), 0);
}

TEST(Characters, QuarticModFive) {
    auto chi = enumerate_characters(5).at(1);
    auto z = std::get<CyclotomicElement>(character_value(chi, 2));
    auto minus_one = std::get<CyclotomicElement>(character_value(chi, 4));
    EXPECT_EQ(z * z, minus_one);
    EXPECT_EQ(minus_one, CyclotomicElement::from_base(4, RationalFunction::constant(-1)));
}

TEST(Characters, MultiplicativeZeroPatternAndUnitValue) {
    for (std::int64_t f = 1; f <= 15; ++f)
        for (const auto& chi : enumerate_characters(f)) {
            EXPECT_EQ(angle(chi.value(1)), 0);
            for (std::int64_t a = 0; a < f; ++a) {
                EXPECT_EQ(chi.value(a).zero, std::gcd(a, f) != 1) << chi.id() << " a=" << a;
                for (std::int64_t b = 0; b < f; ++b) {
                    if (std::gcd(a, f) != 1 || std::gcd(b, f) != 1) continue;
                    BigRational lhs = angle(chi.value(a * b % f));
                    BigRational rhs = angle(chi.value(a)) + angle(chi.value(b));
                    if (rhs >= 1) rhs -= 1;
                    EXPECT_EQ(lhs, rhs) << chi.id();
                }
            }
        }
}

TEST(Characters, Orthogonality) {
    for (std::int64_t f = 1; f <= 15; ++f)
        for (const auto& chi : enumerate_characters(f)) {
            const int L = static_cast<int>(chi.value_order());
            CyclotomicElement sum(L, 1);
            for (std::int64_t a = 0; a < f; ++a) {
                auto v = chi.value(a);
                if (!v.zero) sum = sum + CyclotomicElement::z_power(L, v.exponent, RationalFunction::constant(1));
            }
            if (L == 1) {
                RationalFunction base;
                ASSERT_TRUE(sum.in_base_field(&base));
                EXPECT_EQ(base, RationalFunction::constant(oracle::phi(f)));
            } else {
                EXPECT_EQ(sum, CyclotomicElement(L, 1)) << chi.id();
            }
        }
}

TEST(Characters, DistinctTables) {
    for (std::int64_t f = 1; f <= 15; ++f) {
        auto chars = enumerate_characters(f);
        EXPECT_EQ(static_cast<std::int64_t>(chars.size()), oracle::phi(f));
        std::set<std::vector<BigRational>> tables;
        for (const auto& chi : chars) {
            std::vector<BigRational> t;
            for (std::int64_t a = 0; a < f; ++a) t.push_back(chi.value(a).zero ? BigRational(-1) : angle(chi.value(a)));
            tables.insert(t);
        }
        EXPECT_EQ(tables.size(), chars.size()) << f;
    }
}

TEST(Conductor, Examples) {
    auto trivial6 = enumerate_characters(6).at(0);
    auto c = conductor(trivial6);
    EXPECT_EQ(c.conductor, 1);
    EXPECT_FALSE(c.primitive);
    auto q3 = conductor(enumerate_characters(3).at(1));
    EXPECT_EQ(q3.conductor, 3);
    EXPECT_TRUE(q3.primitive);
    auto t1 = conductor(enumerate_characters(1).at(0));
    EXPECT_EQ(t1.conductor, 1);
    EXPECT_TRUE(t1.primitive);
}

TEST(Conductor, DividesModulusAndMatchesFactoring) {
    for (std::int64_t f = 1; f <= 15; ++f)
        for (const auto& chi : enumerate_characters(f)) {
            auto c = conductor(chi);
            EXPECT_EQ(f % c.conductor, 0);
            // Factoring through f0 means chi(a) depends only on a mod f0 (units only).
            for (std::int64_t f0 = 1; f0 <= f; ++f0) {
                if (f % f0) continue;
                bool factors = true;
                for (std::int64_t a = 0; a < f && factors; ++a)
                    for (std::int64_t b = 0; b < f && factors; ++b)
                        if (std::gcd(a, f) == 1 && std::gcd(b, f) == 1 && (a - b) % f0 == 0)
                            factors = chi.value(a) == chi.value(b);
                if (factors) {
                    EXPECT_LE(c.conductor, f0) << chi.id();
                }
                if (f0 == c.conductor) {
                    EXPECT_TRUE(factors) << chi.id();
                }
            }
            EXPECT_EQ(c.primitive, c.conductor == f);
        }
}

TEST(Characters, IdRoundTrip) {
    for (const auto& chi : enumerate_characters(15)) EXPECT_EQ(parse_character_id(chi.id()), chi);
    EXPECT_THROW(parse_character_id("3"), precondition_error);
    EXPECT_THROW(parse_character_id("3:5"), precondition_error);
    EXPECT_THROW(parse_character_id("15:1"), precondition_error);
}
