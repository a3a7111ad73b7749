#pragma once

#include <optional>
#include <string>

#include "abel/equation.hpp"
#include "abel/numeric.hpp"

namespace abel {

enum class BoundCase { A, B1, B21, B22, C };
enum class BoundMeaning { InvariantCurves, RationalLimitCycles };

inline std::string bound_case_name(BoundCase c) {
    switch (c) {
        case BoundCase::A: return "a";
        case BoundCase::B1: return "b1";
        case BoundCase::B21: return "b21";
        case BoundCase::B22: return "b22";
        case BoundCase::C: return "c";
    }
    return "?";
}

inline std::string bound_meaning_name(BoundMeaning m) {
    return m == BoundMeaning::InvariantCurves ? "invariant-curves" : "rational-limit-cycles";
}

struct BoundReport {
    BoundCase label = BoundCase::A;
    long long value = 0;
    BoundMeaning meaning = BoundMeaning::InvariantCurves;
    int deg_a = 0, deg_b = 0, deg_c = 0;
    RingKind ring = RingKind::PolyRational;
    bool c_constant = false;
    std::optional<long long> darboux_threshold;  // cases b21 / b22 / c
};

inline long long central_binomial_bound(int n) {
    // binom(n, floor(n/2)) + 1; matches binom(n, (n+1)/2) + 1 for odd n.
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(n / 2));
    b += 1;
    if (!b.fits_slong_p()) throw DomainError("bound overflows the report integer");
    return b.get_si();
}

// Case analysis over the degree data:
//  (a)   deg A - deg C <= 1: at most one invariant curve.
//  (b.1) polynomial, or trig with non-constant C, with deg A - deg C odd or
//        deg A + deg C < 2 deg B: at most two invariant curves.
//  (b.21) polynomial otherwise: at most binom(deg A, floor(deg A / 2)) + 1
//        invariant curves; Darboux integrable past deg A + deg C + 4 curves.
//  (b.22) trig with non-constant C otherwise: at most
//        2 deg A + 2 deg C + 4 rational limit cycles.
//  (c)   trig with constant C and deg A - deg C > 1: at most 4 deg A
//        invariant curves (no center can exist).
inline BoundReport classify_bounds(int deg_a, int deg_b, int deg_c, RingKind ring,
                                   bool c_is_constant) {
    if (deg_a <= 0) throw DomainError("classification requires deg A > 0");
    if (deg_c < 0 || deg_b < 0)
        throw DomainError("classification requires B and C nonzero (degrees >= 0)");
    if (c_is_constant && deg_c > 0)
        throw DomainError("inconsistent flags: constant C with positive degree");
    if (!c_is_constant && deg_c == 0)
        throw DomainError("inconsistent flags: degree-zero C marked non-constant");

    BoundReport r;
    r.deg_a = deg_a;
    r.deg_b = deg_b;
    r.deg_c = deg_c;
    r.ring = ring;
    r.c_constant = c_is_constant;

    if (deg_a - deg_c <= 1) {
        r.label = BoundCase::A;
        r.value = 1;
        return r;
    }
    const bool poly = ring != RingKind::Trig;
    if (poly || !c_is_constant) {
        if ((deg_a - deg_c) % 2 != 0 || deg_a + deg_c < 2 * deg_b) {
            r.label = BoundCase::B1;
            r.value = 2;
            return r;
        }
        if (poly) {
            r.label = BoundCase::B21;
            r.value = central_binomial_bound(deg_a);
            r.darboux_threshold = deg_a + deg_c + 4;
            return r;
        }
        r.label = BoundCase::B22;
        r.value = 2LL * deg_a + 2LL * deg_c + 4;
        r.meaning = BoundMeaning::RationalLimitCycles;
        r.darboux_threshold = r.value;
        return r;
    }
    r.label = BoundCase::C;
    r.value = 4LL * deg_a;
    r.darboux_threshold = r.value;
    return r;
}

template <class R>
BoundReport classify_bounds(const AbelEquation<R>& eq) {
    return classify_bounds(eq.A.degree(), eq.B.degree(), eq.C.degree(), RingTraits<R>::kind,
                           eq.C.is_constant());
}

enum class AuditStatus { Pass, NotAuditable };

struct AuditOutcome {
    AuditStatus status = AuditStatus::Pass;
    std::string note;
};

namespace detail {

template <class R>
AuditOutcome audit_impl(const AbelEquation<R>& eq, std::size_t curve_count,
                        const BoundReport& report) {
    if (report.meaning == BoundMeaning::InvariantCurves) {
        if (static_cast<long long>(curve_count) > report.value)
            throw InternalInconsistencyError(
                "bound audit failed: " + std::to_string(curve_count) + " curves exceed bound " +
                std::to_string(report.value));
        return {AuditStatus::Pass, "curve count within bound"};
    }
    // Rational-limit-cycle bound: applies to curves only when no center
    // exists, certified through d'(0) = exp(2 pi mean(C)) - 1 != 0.
    if constexpr (RingTraits<R>::kind == RingKind::Trig) {
        if (is_zero(eq.C.constant_term()))
            return {AuditStatus::NotAuditable, "center-possible: mean of C vanishes"};
        double numeric = 0;
        double reference = 0;
        try {
            auto probe = displacement_slope_probe(eq, 1e-4);
            numeric = probe.estimate;
            reference = probe.reference;
        } catch (const Error&) {
            return {AuditStatus::NotAuditable, "center check probe failed (blow-up)"};
        }
        if (!(std::abs(numeric) > 1e-7) || numeric * reference <= 0)
            return {AuditStatus::NotAuditable, "numeric d'(0) check inconclusive"};
        if (static_cast<long long>(curve_count) > report.value)
            throw InternalInconsistencyError(
                "limit-cycle bound audit failed: " + std::to_string(curve_count) +
                " curves exceed bound " + std::to_string(report.value));
        return {AuditStatus::Pass, "non-center certified; curve count within bound"};
    }
    return {AuditStatus::NotAuditable, "limit-cycle bound outside the trig ring"};
}

}  // namespace detail

// Checks the found curve count against the classified bound. A failure is a
// counterexample to a proved law or a finder bug, and surfaces as an
// internal-inconsistency error.
template <class R>
AuditOutcome audit(const AbelEquation<R>& eq, std::size_t curve_count,
                   const BoundReport& report) {
    return detail::audit_impl(eq, curve_count, report);
}

}  // namespace abel
