#include <gtest/gtest.h>

#include <set>

#include "abel/curves.hpp"
#include "support.hpp"

using namespace abel;
using abel::testing::P;
using abel::testing::Pi;
using abel::testing::T;

namespace {

AbelEquation<PolyQ> e1() {
    return {P("t^3+t"), P("-(t^2+3*t+1)"), P("1")};
}
AbelEquation<PolyQ> e2() {
    return {P("t^5+3*t^3+2*t"), P("-(2*t^3+5*t)"), P("t")};
}
AbelEquation<PolyQ> e3() {
    return {P("2*(t^2+1)*(t+1)^2"), P("-3*(t+1)^2"), P("1")};
}
AbelEquation<TrigQ> e4() {
    return {T("25/4*sin(t)+5/2*sin(2t)+1/4*sin(3t)"), T("-(sin(2t)+4*sin(t))"), T("sin(t)")};
}

}  // namespace

TEST(EnumerateDivisors, SpecExamples) {
    auto poly_divs = enumerate_divisors(e1());
    ASSERT_EQ(poly_divs.size(), 1u);
    EXPECT_EQ(poly_divs[0].divisor, P("t^2+1"));
    EXPECT_EQ(poly_divs[0].complement, P("t"));

    AbelEquation<PolyQi> eg{Pi("t^3+t"), Pi("-(t^2+3*t+1)"), Pi("1")};
    auto gauss_divs = enumerate_divisors(eg);
    std::set<std::string> names;
    for (const auto& d : gauss_divs) names.insert(render(d.divisor));
    EXPECT_EQ(names, (std::set<std::string>{"t-i", "t+i", "t^2+1"}));

    AbelEquation<TrigQ> et{T("sin(t)*(cos(t)+2)*(cos(t)+3)"), T("sin(t)"), T("1")};
    auto trig_divs = enumerate_divisors(et);
    std::set<std::string> trig_names;
    for (const auto& d : trig_divs) trig_names.insert(render(d.divisor));
    EXPECT_EQ(trig_names.size(), 3u);
    EXPECT_TRUE(trig_names.count("2+cos(t)"));
    EXPECT_TRUE(trig_names.count("3+cos(t)"));
}

TEST(SolveConstant, SpecExamples) {
    {
        auto divs = enumerate_divisors(e1());
        auto ks = solve_constant(divs[0], e1());
        ASSERT_EQ(ks.size(), 1u);
        EXPECT_TRUE(is_one(ks[0]));
    }
    {
        auto divs = enumerate_divisors(e2());
        int found = 0;
        for (const auto& d : divs) {
            auto ks = solve_constant(d, e2());
            if (d.divisor == P("t^2+1") || d.divisor == P("t^2+2")) {
                ASSERT_EQ(ks.size(), 1u);
                EXPECT_TRUE(is_one(ks[0]));
                ++found;
            }
        }
        EXPECT_EQ(found, 2);
    }
    {
        auto divs = enumerate_divisors(e3());
        bool checked = false;
        for (const auto& d : divs) {
            if (!(d.divisor == P("t^2+1"))) continue;
            auto ks = solve_constant(d, e3());
            ASSERT_EQ(ks.size(), 2u);
            std::set<std::string> vals{str(ks[0]), str(ks[1])};
            EXPECT_EQ(vals, (std::set<std::string>{"1", "2"}));
            checked = true;
        }
        EXPECT_TRUE(checked);
    }
}

TEST(FindCurves, SpecExamples) {
    auto c1 = find_invariant_curves(e1());
    ASSERT_EQ(c1.size(), 1u);
    EXPECT_EQ(c1[0].base, P("t^2+1"));
    EXPECT_TRUE(is_one(c1[0].k));

    auto c2 = find_invariant_curves(e2());
    ASSERT_EQ(c2.size(), 2u);
    EXPECT_EQ(c2[0].base, P("t^2+1"));
    EXPECT_EQ(c2[1].base, P("t^2+2"));

    auto c3 = find_invariant_curves(e3());
    ASSERT_EQ(c3.size(), 2u);
    EXPECT_EQ(c3[0].base, P("t^2+1"));
    EXPECT_EQ(c3[1].base, P("t^2+1"));
    EXPECT_EQ(str(c3[1].k), "2");

    auto c4 = find_invariant_curves(e4());
    ASSERT_EQ(c4.size(), 2u);
    EXPECT_EQ(c4[0].base, T("2+cos(t)"));
    EXPECT_EQ(c4[1].base, T("3+cos(t)"));
}

TEST(FindCurves, ParallelMatchesSequential) {
    auto sequential = find_invariant_curves(e2(), 1);
    auto parallel = find_invariant_curves(e2(), 4);
    EXPECT_EQ(sequential.size(), parallel.size());
    for (std::size_t i = 0; i < sequential.size(); ++i)
        EXPECT_TRUE(sequential[i] == parallel[i]);
}

TEST(Cofactor, SpecExamples) {
    auto curves = find_invariant_curves(e1());
    auto cof = cofactor_of(curves[0], e1());
    EXPECT_EQ(cof.k2, P("t^3+t"));
    EXPECT_EQ(render(cof.k1), "-t^2-2*t-1");
    EXPECT_TRUE(RingTraits<PolyQ>::ext_is_zero(cof.k0));

    auto curves2 = find_invariant_curves(e2());
    auto cof2 = cofactor_of(curves2[0], e2());
    EXPECT_EQ(render(cof2.k1), "-t^3-3*t");

    InvariantCurve<PolyQ> fake{P("t^2+2"), QuadRational{Rational(1)}};
    EXPECT_THROW(cofactor_of(fake, e1()), DomainError);
}

TEST(VerifyInvariance, SpecExamples) {
    auto good = verify_invariance<PolyQ>(P("t^2+1"), Rational(-1), e1());
    EXPECT_TRUE(good.ok);
    EXPECT_EQ(good.residual, "0");

    auto bad = verify_invariance<PolyQ>(P("t^2+2"), Rational(-1), e1());
    EXPECT_FALSE(bad.ok);
    EXPECT_NE(bad.residual, "0");

    auto zero_c = verify_invariance<PolyQ>(P("t^2+1"), Rational(0), e1());
    EXPECT_FALSE(zero_c.ok);
}

TEST(VerifyInvariance, GeneralConstantScaling) {
    // (2p) x - 2 = 0 describes the same curve as p x - 1 = 0
    auto eq = e1();
    auto scaled = verify_invariance<PolyQ>(P("2*(t^2+1)"), Rational(-2), eq);
    EXPECT_TRUE(scaled.ok);
    auto wrong = verify_invariance<PolyQ>(P("2*(t^2+1)"), Rational(-1), eq);
    EXPECT_FALSE(wrong.ok);
}

TEST(FindCurves, SurdConstantsAreFoundExactly) {
    // A = p*m with B chosen so the constant equation has irrational roots:
    // take p = t^2+1, m = 1 scaled... use gen-style construction directly:
    // m + k B + k^2 w = 0 per coefficient with w = p' + p C.
    // Pick C = 1, B = -(m/k0 ... ) - instead build from a known surd pair:
    // curves p and K p with K = 1+sqrt(2) require A = K p w, B = -(K+1) w
    // which has irrational coefficients; not representable. Instead verify
    // the solver path on a quadratic with rational discriminant:
    // g(k) = k^2 - 2 has roots +-sqrt(2).
    // Construct: m = -2*w_base, B = 0*... Direct algebra check instead:
    int skipped = 0;
    auto roots = abel::detail::constant_roots(
        Polynomial<Rational>::from_coeffs({Rational(-2), Rational(0), Rational(1)}), &skipped);
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_EQ(roots[0].d, 2);
    EXPECT_EQ(skipped, 0);
    // negative discriminant: no real constants
    auto none = abel::detail::constant_roots(
        Polynomial<Rational>::from_coeffs({Rational(2), Rational(0), Rational(1)}), &skipped);
    EXPECT_TRUE(none.empty());
    EXPECT_EQ(skipped, 1);
}

TEST(FindCurves, SurdProportionalPair) {
    // constants solve k^2 - 3k + 1 = 0, a conjugate surd pair in Q(sqrt 5)
    AbelEquation<PolyQ> eq{P("(t^2+1)*(t+1)^2"), P("-3*(t+1)^2"), P("1")};
    auto curves = find_invariant_curves(eq);
    ASSERT_EQ(curves.size(), 2u);
    EXPECT_EQ(curves[0].base, P("t^2+1"));
    EXPECT_EQ(curves[0].k.d, 5);
    EXPECT_EQ(curves[1].k.d, 5);
    EXPECT_EQ(curves[0].k.a, Rational(3, 2));
    EXPECT_EQ(curves[0].k.b + curves[1].k.b, Rational(0));
    // product of the conjugate constants is the rational 1
    EXPECT_TRUE(is_one(curves[0].k * curves[1].k));
    for (const auto& c : curves) {
        auto check = invariance_residual<PolyQ>(c.p_ext(), QuadRational{Rational(-1)}, eq);
        EXPECT_TRUE(check.first);
    }
}

TEST(FindCurves, NoCurveThroughVanishingDivisor) {
    // A = t^3 + t has divisors t, t^3+t with real roots; only t^2+1 works.
    auto divs = enumerate_divisors(e1());
    for (const auto& d : divs) EXPECT_TRUE(RingTraits<PolyQ>::nonvanishing(d.divisor));
}

TEST(FindCurves, GaussianConstantCurves) {
    // proportional pair with ratio i: both curves carry Gaussian constants
    auto inst = gen_proportional(Pi("t-i"), GaussianRational{Rational(0), Rational(1)},
                                 Pi("1"));
    auto found = find_invariant_curves(inst.eq);
    ASSERT_EQ(found.size(), 2u);
    EXPECT_EQ(found[0].base, found[1].base);
    auto ratio = found[1].k / found[0].k;
    bool is_i = ratio == QuadGaussian{GaussianRational{Rational(0), Rational(1)}} ||
                ratio == QuadGaussian{GaussianRational{Rational(0), Rational(-1)}};
    EXPECT_TRUE(is_i);
}

TEST(FindCurves, UnsupportedConstantsAreSkippedAndCounted) {
    // the constant equation reduces to k^2 + k - i = 0 with discriminant
    // 1 + 4i: not a square in Q(i) and not rational, so the root is skipped
    AbelEquation<PolyQi> eq{Pi("-i*(t^2+1)*(t+1)^2"), Pi("(t+1)^2"), Pi("1")};
    int skipped = 0;
    auto curves = find_invariant_curves(eq, 1, &skipped);
    EXPECT_GE(skipped, 1);
}

TEST(FindCurves, ThreeCurveInstanceOverGaussians) {
    // a pair construction whose A admits a third invariant curve; all three
    // share the half degree (deg A - deg C)/2 = 2
    AbelEquation<PolyQi> eq{
        Pi("t^4+(4-6*i)*t^3+(-8-19*i)*t^2+(-27-5*i)*t+(-10+10*i)"),
        Pi("-2*t^2+(-6+6*i)*t+(1+10*i)"), Pi("1")};
    auto curves = find_invariant_curves(eq);
    ASSERT_EQ(curves.size(), 3u);
    for (const auto& c : curves) EXPECT_EQ(c.base.degree(), 2);
    // pairwise distinct bases: three distinct proportionality classes
    EXPECT_FALSE(curves[0].base == curves[1].base);
    EXPECT_FALSE(curves[0].base == curves[2].base);
    EXPECT_FALSE(curves[1].base == curves[2].base);
}

TEST(FindCurves, NeverReturnsOppositePairs) {
    Rng rng(71);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto instance = random_instance<PolyQ>(seed, 8);
        auto curves = find_invariant_curves(instance.eq);
        for (std::size_t i = 0; i < curves.size(); ++i)
            for (std::size_t j = i + 1; j < curves.size(); ++j)
                if (curves[i].base == curves[j].base)
                    EXPECT_FALSE(curves[i].k == -curves[j].k)
                        << "p and -p cannot both be invariant while B != 0";
    }
}
