#include <gtest/gtest.h>

#include "abel/structure.hpp"
#include "abel/family.hpp"
#include "support.hpp"

using namespace abel;
using abel::testing::P;
using abel::testing::T;

namespace {

AbelEquation<PolyQ> e2() {
    return {P("t^5+3*t^3+2*t"), P("-(2*t^3+5*t)"), P("t")};
}
AbelEquation<PolyQ> e3() {
    return {P("2*(t^2+1)*(t+1)^2"), P("-3*(t+1)^2"), P("1")};
}

}  // namespace

TEST(PairIdentity, SpecExamples) {
    auto curves = find_invariant_curves(e2());
    ASSERT_EQ(curves.size(), 2u);
    auto pair = pair_identity_check(e2(), curves[0], curves[1]);
    EXPECT_TRUE(RingTraits<PolyQ>::ext_is_zero(pair.r));  // p2 - p1 = 1
    EXPECT_TRUE(pair.division_checked);

    auto curves3 = find_invariant_curves(e3());
    auto pair3 = pair_identity_check(e3(), curves3[0], curves3[1]);
    // r = 2 p p' with p = t^2+1: 2(t^2+1)(2t) = 4t^3+4t
    EXPECT_EQ(render(pair3.r), "4*t^3+4*t");

    EXPECT_THROW(pair_identity_check(e2(), curves[0], curves[0]), DomainError);
}

TEST(PairIdentity, HoldsOnGeneratedPairs) {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        auto instance = random_instance<PolyQ>(seed, 8);
        auto curves = find_invariant_curves(instance.eq);
        for (std::size_t i = 0; i < curves.size(); ++i)
            for (std::size_t j = i + 1; j < curves.size(); ++j)
                EXPECT_NO_THROW(pair_identity_check(instance.eq, curves[i], curves[j]));
    }
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        auto instance = random_instance<TrigQ>(seed, 4);
        auto curves = find_invariant_curves(instance.eq);
        for (std::size_t i = 0; i < curves.size(); ++i)
            for (std::size_t j = i + 1; j < curves.size(); ++j)
                EXPECT_NO_THROW(pair_identity_check(instance.eq, curves[i], curves[j]));
    }
}

TEST(DegreeLaws, SpecExamples) {
    auto curves = find_invariant_curves(e2());
    auto checks = degree_laws_check(e2(), curves);
    ASSERT_FALSE(checks.empty());
    EXPECT_EQ(checks[0].name, "pair-degree-sum");  // 5 - 1 = 2 + 2
    EXPECT_TRUE(checks[0].ok);

    AbelEquation<PolyQ> one_curve{P("t^3+t"), P("-(t^2+3*t+1)"), P("1")};
    auto single = degree_laws_check(one_curve, find_invariant_curves(one_curve));
    EXPECT_TRUE(single.empty());  // vacuous
}

TEST(Parameterize, SpecExamples) {
    auto curves = find_invariant_curves(e2());
    auto fam = parameterize_pair(curves[0], curves[1], e2());
    EXPECT_EQ(fam.q, P("1"));
    EXPECT_EQ(render(fam.s1), "t^2+1");
    EXPECT_EQ(render(fam.s2), "t^2+2");
    EXPECT_TRUE(is_one(fam.k));
    EXPECT_EQ(fam.qhat, P("1"));
    EXPECT_EQ(render(fam.s), "t");  // s = C here
    EXPECT_TRUE(fam.verified);

    auto curves3 = find_invariant_curves(e3());
    auto fam3 = parameterize_pair(curves3[0], curves3[1], e3());
    EXPECT_EQ(fam3.q, P("t^2+1"));
    EXPECT_EQ(render(fam3.s1), "1");
    EXPECT_EQ(render(fam3.s2), "2");
    EXPECT_EQ(str(fam3.k), "1");
    // s = q' + q C = (t+1)^2 for q = t^2+1, C = 1
    EXPECT_EQ(render(fam3.s), "t^2+2*t+1");
    EXPECT_TRUE(fam3.verified);

    EXPECT_THROW(parameterize_pair(curves[0], curves[0], e2()), DomainError);
}

// The two printed variants of the s formula differ in the sign of the q'
// term; substituting both into the curve condition on instances with
// non-constant gcd decides it. The minus variant must fail on E3.
TEST(Parameterize, SignResolutionOracle) {
    auto curves3 = find_invariant_curves(e3());
    auto fam3 = parameterize_pair(curves3[0], curves3[1], e3());
    PolyQ q = fam3.q;
    PolyQ c = P("1");
    PolyQ plus = q.derivative() + q * c;   // resolved form (qhat = 1)
    PolyQ minus = -q.derivative() + q * c; // printed alternative
    auto a_over = exact_div(e3().A, P("2*(t^2+1)"));  // q s1 s2 = 2(t^2+1)
    ASSERT_TRUE(a_over.has_value());
    EXPECT_EQ(*a_over, plus);
    EXPECT_FALSE(*a_over == minus);
}

TEST(Parameterize, RoundTripThroughGenerator) {
    int exercised = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        auto instance = random_instance<PolyQ>(seed, 8, "pair");
        auto curves = find_invariant_curves(instance.eq);
        ASSERT_GE(curves.size(), 2u);
        auto fam = parameterize_pair(instance.curves[0], instance.curves[1], instance.eq);
        EXPECT_TRUE(fam.verified);
        // recover q and the product k*qhat of the generating data
        auto p1 = *instance.curves[0].p_plain();
        auto p2 = *instance.curves[1].p_plain();
        EXPECT_EQ(fam.q, gcd(p1, p2));
        auto diff = RingTraits<PolyQ>::to_ext(fam.qhat) * fam.k * RingTraits<PolyQ>::to_ext(fam.q);
        EXPECT_TRUE(RingTraits<PolyQ>::ext_is_zero(
            (instance.curves[1].p_ext() - instance.curves[0].p_ext()) - diff));
        ++exercised;
    }
    EXPECT_EQ(exercised, 500);
}

TEST(Parameterize, NontrivialQhat) {
    // q = (t^2+1)(t^2+2), qhat = t^2+1: s2 = s1 + k qhat stays coprime to s1.
    PolyQ q = P("(t^2+1)*(t^2+2)");
    auto instance = gen_pair(q, P("t^2+3"), Rational(1), P("t^2+1"), P("1"));
    ASSERT_EQ(instance.curves.size(), 2u);
    auto fam = parameterize_pair(instance.curves[0], instance.curves[1], instance.eq);
    EXPECT_EQ(fam.q, q);
    EXPECT_EQ(fam.qhat, P("t^2+1"));
    EXPECT_TRUE(fam.verified);
}

TEST(ProportionalGroups, SpecExamples) {
    auto curves3 = find_invariant_curves(e3());
    auto groups3 = proportional_groups(curves3, e3());
    ASSERT_EQ(groups3.size(), 1u);
    EXPECT_EQ(groups3[0].members.size(), 2u);
    EXPECT_EQ(str(groups3[0].ratio), "2");
    EXPECT_TRUE(groups3[0].witnesses_verified);

    auto curves2 = find_invariant_curves(e2());
    auto groups2 = proportional_groups(curves2, e2());
    EXPECT_EQ(groups2.size(), 2u);
    for (const auto& g : groups2) EXPECT_EQ(g.members.size(), 1u);

    AbelEquation<PolyQ> one_curve{P("t^3+t"), P("-(t^2+3*t+1)"), P("1")};
    auto groups1 = proportional_groups(find_invariant_curves(one_curve), one_curve);
    ASSERT_EQ(groups1.size(), 1u);
    EXPECT_EQ(groups1[0].members.size(), 1u);
}

TEST(ProportionalGroups, CapHoldsOnGeneratedInstances) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto instance = random_instance<PolyQ>(seed, 8);
        auto curves = find_invariant_curves(instance.eq);
        EXPECT_NO_THROW(proportional_groups(curves, instance.eq));
    }
}

TEST(TrigPairs, DegreeLawNonconstantC) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        auto instance = random_instance<TrigQ>(seed, 4);
        if (instance.eq.C.is_constant()) continue;
        auto curves = find_invariant_curves(instance.eq);
        for (std::size_t i = 0; i < curves.size(); ++i)
            for (std::size_t j = i + 1; j < curves.size(); ++j)
                EXPECT_EQ(curves[i].base.degree() + curves[j].base.degree(),
                          instance.eq.A.degree() - instance.eq.C.degree());
    }
}
