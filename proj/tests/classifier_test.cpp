#include <gtest/gtest.h>

#include "abel/classify.hpp"
#include "abel/curves.hpp"
#include "abel/family.hpp"
#include "support.hpp"

using namespace abel;
using abel::testing::P;
using abel::testing::T;

TEST(ClassifyBounds, SpecExamples) {
    auto a = classify_bounds(2, 5, 1, RingKind::PolyRational, false);
    EXPECT_EQ(a.label, BoundCase::A);
    EXPECT_EQ(a.value, 1);

    auto b21 = classify_bounds(5, 3, 1, RingKind::PolyRational, false);
    EXPECT_EQ(b21.label, BoundCase::B21);
    EXPECT_EQ(b21.value, 11);  // C(5,2)+1
    ASSERT_TRUE(b21.darboux_threshold);
    EXPECT_EQ(*b21.darboux_threshold, 10);

    auto b22 = classify_bounds(3, 2, 1, RingKind::Trig, false);
    EXPECT_EQ(b22.label, BoundCase::B22);
    EXPECT_EQ(b22.value, 12);
    EXPECT_EQ(b22.meaning, BoundMeaning::RationalLimitCycles);

    auto c = classify_bounds(3, 2, 0, RingKind::Trig, true);
    EXPECT_EQ(c.label, BoundCase::C);
    EXPECT_EQ(c.value, 12);  // 4 * deg A
    EXPECT_EQ(c.meaning, BoundMeaning::InvariantCurves);
}

TEST(ClassifyBounds, CaseSelectionTotal) {
    // every admissible degree tuple lands in exactly one case
    for (int deg_a = 1; deg_a <= 8; ++deg_a) {
        for (int deg_b = 0; deg_b <= 8; ++deg_b) {
            for (int deg_c = 0; deg_c <= 8; ++deg_c) {
                for (RingKind ring :
                     {RingKind::PolyRational, RingKind::PolyGaussian, RingKind::Trig}) {
                    bool c_const = deg_c == 0;
                    auto r = classify_bounds(deg_a, deg_b, deg_c, ring, c_const);
                    EXPECT_GE(r.value, 1);
                    if (r.label == BoundCase::B21) EXPECT_GE(r.value, 2);  // never tighter than b1
                    if (ring != RingKind::Trig)
                        EXPECT_NE(r.label, BoundCase::B22);
                }
            }
        }
    }
}

TEST(ClassifyBounds, OddCaseMatchesEvenConvention) {
    // for odd deg A the implemented binomial equals binom(n, (n+1)/2) + 1
    auto b = classify_bounds(7, 1, 1, RingKind::PolyRational, false);
    EXPECT_EQ(b.label, BoundCase::B21);
    EXPECT_EQ(b.value, 36);  // C(7,4) + 1 = 35 + 1
    auto e = classify_bounds(4, 1, 0, RingKind::PolyRational, true);
    EXPECT_EQ(e.label, BoundCase::B21);
    EXPECT_EQ(e.value, 7);  // C(4,2) + 1
}

TEST(ClassifyBounds, Errors) {
    EXPECT_THROW(classify_bounds(0, 1, 1, RingKind::PolyRational, false), DomainError);
    EXPECT_THROW(classify_bounds(3, 1, 2, RingKind::Trig, true), DomainError);
    EXPECT_THROW(classify_bounds(3, 1, 0, RingKind::Trig, false), DomainError);
}

TEST(Audit, SpecExamples) {
    AbelEquation<PolyQ> eq1{P("t^3+t"), P("-(t^2+3*t+1)"), P("1")};
    auto curves1 = find_invariant_curves(eq1);
    auto bound1 = classify_bounds(eq1);
    EXPECT_EQ(bound1.label, BoundCase::B1);  // deg diff 3 odd
    EXPECT_EQ(bound1.value, 2);
    EXPECT_EQ(audit(eq1, curves1.size(), bound1).status, AuditStatus::Pass);

    AbelEquation<PolyQ> eq2{P("t^5+3*t^3+2*t"), P("-(2*t^3+5*t)"), P("t")};
    auto bound2 = classify_bounds(eq2);
    EXPECT_EQ(audit(eq2, find_invariant_curves(eq2).size(), bound2).status, AuditStatus::Pass);

    AbelEquation<PolyQ> eq3{P("2*(t^2+1)*(t+1)^2"), P("-3*(t+1)^2"), P("1")};
    auto bound3 = classify_bounds(eq3);
    EXPECT_EQ(bound3.label, BoundCase::B21);
    EXPECT_EQ(bound3.value, 7);  // deg A = 4 under the even-degree convention
    EXPECT_EQ(audit(eq3, find_invariant_curves(eq3).size(), bound3).status, AuditStatus::Pass);
}

TEST(Audit, FailureSurfacesLoudly) {
    AbelEquation<PolyQ> eq{P("t^3+t"), P("-(t^2+3*t+1)"), P("1")};
    auto bound = classify_bounds(eq);
    EXPECT_THROW(audit(eq, 99, bound), InternalInconsistencyError);
}

TEST(Audit, LimitCycleCaseCenterGate) {
    // b22 with mean(C) = 0: not auditable (center possible)
    AbelEquation<TrigQ> eq{T("(cos(t)+2)*(cos(t)+3)*(cos(t)+4)"), T("cos(t)"), T("sin(t)")};
    auto bound = classify_bounds(eq);
    ASSERT_EQ(bound.label, BoundCase::B22);
    auto outcome = audit(eq, find_invariant_curves(eq).size(), bound);
    EXPECT_EQ(outcome.status, AuditStatus::NotAuditable);

    // b22 with nonzero mean: certified and audited
    AbelEquation<TrigQ> eq2{T("(cos(t)+2)*(cos(t)+3)*(cos(t)+4)"), T("cos(t)"),
                            T("1/4+sin(t)")};
    auto bound2 = classify_bounds(eq2);
    ASSERT_EQ(bound2.label, BoundCase::B22);
    auto outcome2 = audit(eq2, find_invariant_curves(eq2).size(), bound2);
    EXPECT_EQ(outcome2.status, AuditStatus::Pass);
}

TEST(Audit, GeneratedInstancesAlwaysPass) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        auto inst = random_instance<PolyQ>(seed, 8);
        auto curves = find_invariant_curves(inst.eq);
        auto bound = classify_bounds(inst.eq);
        auto outcome = audit(inst.eq, curves.size(), bound);
        EXPECT_NE(outcome.note, "");
    }
}
