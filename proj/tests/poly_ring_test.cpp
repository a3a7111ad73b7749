#include <gtest/gtest.h>

#include "abel/poly_factor.hpp"
#include "abel/poly_roots.hpp"
#include "support.hpp"

using namespace abel;
using abel::testing::P;
using abel::testing::Pi;
using abel::testing::Q;

TEST(Scalar, RationalCanonicalForm) {
    Rational r = Q("4/6");
    EXPECT_EQ(str(r), "2/3");
    EXPECT_EQ(str(Q("2") / Q("-4")), "-1/2");
    EXPECT_TRUE(is_zero(Q("0/5")));
}

TEST(Scalar, GaussianArithmetic) {
    GaussianRational i{Rational(0), Rational(1)};
    EXPECT_EQ(str(i * i), "-1");
    GaussianRational z{Rational(1), Rational(2)};
    EXPECT_EQ(str(z * conj(z)), "5");
    EXPECT_EQ(str(z / z), "1");
}

TEST(Scalar, QuadraticSurdArithmetic) {
    QuadRational s{Rational(1), Rational(1), 2};  // 1 + sqrt(2)
    QuadRational prod = s * QuadRational{Rational(-1), Rational(1), 2};
    EXPECT_EQ(str(prod), "1");  // (1+s)(-1+s) = s^2 - 1 = 1
    QuadRational inv = QuadRational{Rational(1)} / s;
    EXPECT_TRUE(is_one(inv * s));
    QuadRational other_field{Rational(0), Rational(1), 3};
    EXPECT_THROW((void)(s + other_field), DomainError);
}

TEST(Scalar, QuadSqrt) {
    auto r = quad_sqrt(Q("9/4"));
    ASSERT_TRUE(r);
    EXPECT_EQ(str(*r), "3/2");
    auto s = quad_sqrt(Q("8"));
    ASSERT_TRUE(s);
    EXPECT_EQ(s->d, 2);
    EXPECT_EQ(str(s->b), "2");
    EXPECT_FALSE(quad_sqrt(Q("-4")));  // no real root of a negative rational
    auto g = quad_sqrt(GaussianRational{Rational(0), Rational(2)});  // sqrt(2i) = 1+i
    ASSERT_TRUE(g);
    EXPECT_TRUE(is_zero((g->a * g->a).im - Rational(2)));
}

TEST(Divrem, SpecExamples) {
    auto [q1, r1] = divrem(P("t^5+3*t^3+2*t"), P("t^4+3*t^2+2"));
    EXPECT_EQ(q1, P("t"));
    EXPECT_TRUE(r1.is_zero_poly());

    auto [q2, r2] = divrem(P("t^2+1"), P("t^2+1"));
    EXPECT_EQ(q2, P("1"));
    EXPECT_TRUE(r2.is_zero_poly());

    auto [q3, r3] = divrem(P("t^2+3*t+1"), P("t^2+1"));
    EXPECT_EQ(q3, P("1"));
    EXPECT_EQ(r3, P("3*t"));
}

TEST(Divrem, Errors) {
    EXPECT_THROW(divrem(P("t"), PolyQ{}), DomainError);
}

TEST(Divrem, RecombinationProperty) {
    Rng rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        PolyQ a = abel::testing::random_poly(rng, 8, false);
        PolyQ b = abel::testing::random_poly(rng, 8);
        auto [q, r] = divrem(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
}

TEST(Gcd, SpecExamples) {
    EXPECT_EQ(gcd(P("t^2+1"), P("t^2+2")), P("1"));
    EXPECT_EQ(gcd(P("t*(t^2+1)"), P("t^2+1")), P("t^2+1"));
    EXPECT_EQ(gcd(P("(t+1)^2*(t^2+1)"), P("(t+1)*t")), P("t+1"));
    EXPECT_THROW(gcd(PolyQ{}, PolyQ{}), DomainError);
}

TEST(Gcd, DividesAndScales) {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        PolyQ a = abel::testing::random_poly(rng, 6);
        PolyQ b = abel::testing::random_poly(rng, 6);
        PolyQ g = gcd(a, b);
        EXPECT_TRUE(exact_div(a, g).has_value());
        EXPECT_TRUE(exact_div(b, g).has_value());
        PolyQ c = abel::testing::random_poly(rng, 3);
        PolyQ scaled = gcd(a * c, b * c);
        EXPECT_EQ(scaled, (g * c).monic());
    }
}

TEST(Derivative, SpecExamplesAndLeibniz) {
    EXPECT_EQ(P("t^2+1").derivative(), P("2*t"));
    EXPECT_TRUE(P("5").derivative().is_zero_poly());
    EXPECT_EQ(P("t^4+3*t^2+2").derivative(), P("4*t^3+6*t"));

    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        PolyQ a = abel::testing::random_poly(rng, 5, false);
        PolyQ b = abel::testing::random_poly(rng, 5, false);
        EXPECT_EQ((a * b).derivative(), a.derivative() * b + a * b.derivative());
    }
}

TEST(Factor, SpecExamples) {
    auto f1 = factor(P("t^3+t"));
    ASSERT_EQ(f1.factors.size(), 2u);
    EXPECT_EQ(f1.factors[0].first, P("t"));
    EXPECT_EQ(f1.factors[1].first, P("t^2+1"));

    auto f2 = factor(Pi("t^3+t"));
    ASSERT_EQ(f2.factors.size(), 3u);
    EXPECT_EQ(f2.factors[0].first, Pi("t-i"));
    EXPECT_EQ(f2.factors[1].first, Pi("t"));
    EXPECT_EQ(f2.factors[2].first, Pi("t+i"));

    auto f3 = factor(P("(t+1)^2"));
    ASSERT_EQ(f3.factors.size(), 1u);
    EXPECT_EQ(f3.factors[0].first, P("t+1"));
    EXPECT_EQ(f3.factors[0].second, 2);

    EXPECT_THROW(factor(P("5")), DomainError);
    EXPECT_THROW(factor(PolyQ{}), DomainError);
}

TEST(Factor, ReassemblyProperty) {
    Rng rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        PolyQ f = abel::testing::random_poly(rng, 4) * abel::testing::random_poly(rng, 4);
        if (f.degree() < 1) continue;
        auto fac = factor(f);
        PolyQ prod(fac.unit);
        for (const auto& [g, m] : fac.factors) {
            EXPECT_EQ(g.leading(), Rational(1));
            prod = prod * g.pow_u(static_cast<unsigned>(m));
        }
        EXPECT_EQ(prod, f);
    }
}

TEST(Factor, GaussianReassemblyProperty) {
    Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        PolyQi f =
            abel::testing::random_gaussian_poly(rng, 3) * abel::testing::random_gaussian_poly(rng, 2);
        if (f.degree() < 1) continue;
        auto fac = factor(f);
        PolyQi prod(fac.unit);
        for (const auto& [g, m] : fac.factors) prod = prod * g.pow_u(static_cast<unsigned>(m));
        EXPECT_EQ(prod, f);
    }
}

TEST(Factor, HigherDegreeirreducibleOverQi) {
    // t^4 + 1 factors over Q(i) into two conjugate quadratics
    auto fac = factor(Pi("t^4+1"));
    ASSERT_EQ(fac.factors.size(), 2u);
    for (const auto& [g, m] : fac.factors) {
        EXPECT_EQ(g.degree(), 2);
        EXPECT_EQ(m, 1);
    }
}

TEST(Nonvanishing, SpecExamples) {
    EXPECT_TRUE(nonvanishing_on_reals(P("t^2+1")));
    EXPECT_FALSE(nonvanishing_on_reals(P("t^3+t")));
    EXPECT_TRUE(nonvanishing_on_reals(Pi("t-i")));
    EXPECT_THROW(nonvanishing_on_reals(PolyQ{}), DomainError);
}

TEST(Nonvanishing, AgreesWithSampling) {
    Rng rng(23);
    int vanishing_seen = 0, nonvanishing_seen = 0;
    for (int trial = 0; trial < 150; ++trial) {
        PolyQ f = abel::testing::random_poly(rng, 8);
        bool claimed = nonvanishing_on_reals(f);
        (claimed ? nonvanishing_seen : vanishing_seen)++;
        // dense sampling can only certify the "vanishing" direction
        bool sign_change = false;
        double prev = 0;
        for (int i = 0; i <= 1000; ++i) {
            double t = -50.0 + i * 0.1;
            double v = 0;
            for (int d = f.degree(); d >= 0; --d) v = v * t + to_double(f.coeff(d));
            if (i > 0 && v * prev < 0) sign_change = true;
            prev = v;
        }
        if (sign_change) EXPECT_FALSE(claimed);
        if (claimed) EXPECT_EQ(count_real_roots(f), 0);
    }
    EXPECT_GT(vanishing_seen, 0);
    EXPECT_GT(nonvanishing_seen, 0);
}

TEST(SturmIsolation, CountsAndSeparates) {
    PolyQ f = P("(t-1)*(t-2)*(t^2+1)");
    EXPECT_EQ(count_real_roots(f), 2);
    auto roots = isolate_real_roots(f);
    ASSERT_EQ(roots.size(), 2u);
    for (const auto& iv : roots) EXPECT_LT(iv.lo, iv.hi);
    // repeated roots are counted once
    EXPECT_EQ(count_real_roots(P("(t-3)^4")), 1);
}

TEST(QuadraticSurd, SquarefreeDecomposition) {
    auto [s, d] = squarefree_decompose(Integer(72));  // 72 = 6^2 * 2
    EXPECT_EQ(s, 6);
    EXPECT_EQ(d, 2);
    auto [s2, d2] = squarefree_decompose(Integer(1));
    EXPECT_EQ(s2, 1);
    EXPECT_EQ(d2, 1);
}
