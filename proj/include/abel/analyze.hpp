#pragma once

#include <string>

#include "abel/darboux.hpp"
#include "abel/numeric.hpp"
#include "abel/report.hpp"
#include "abel/structure.hpp"

namespace abel {

struct AnalyzeOptions {
    int jobs = 1;
    bool with_numeric = true;
    int samples = 1000;
    TrajectoryConfig trajectory;
};

namespace detail {

template <class R>
void structure_sections(const AbelEquation<R>& eq, const std::vector<InvariantCurve<R>>& curves,
                        Json& report) {
    using T = RingTraits<R>;
    Json pairs = Json::array();
    Json params = Json::array();
    for (std::size_t i = 0; i < curves.size(); ++i) {
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            auto pair = pair_identity_check(eq, curves[i], curves[j]);
            Json pj{{"i", i + 1},
                    {"j", j + 1},
                    {"r", render(pair.r)},
                    {"identity_ok", true}};
            if constexpr (!T::is_trig) pj["division_checked"] = pair.division_checked;
            pairs.push_back(std::move(pj));

            auto fam = parameterize_pair(curves[i], curves[j], eq);
            params.push_back(Json{{"i", i + 1},
                                  {"j", j + 1},
                                  {"q", render(fam.q)},
                                  {"s1", render(fam.s1)},
                                  {"s2", render(fam.s2)},
                                  {"k", str(fam.k)},
                                  {"qhat", render(fam.qhat)},
                                  {"s", render(fam.s)},
                                  {"s_formula", kSFormula},
                                  {"verified", fam.verified}});
        }
    }
    report["pairs"] = std::move(pairs);
    report["parameterization"] = std::move(params);

    Json laws = Json::array();
    for (const auto& check : degree_laws_check(eq, curves))
        laws.push_back(Json{{"name", check.name}, {"ok", check.ok}, {"detail", check.detail}});
    report["degree_laws"] = std::move(laws);

    Json groups = Json::array();
    for (const auto& g : proportional_groups(curves, eq)) {
        Json gj;
        Json members = Json::array();
        for (auto m : g.members) members.push_back(m + 1);
        gj["members"] = std::move(members);
        if (g.members.size() == 2) {
            gj["ratio"] = str(g.ratio);
            gj["witnesses_verified"] = g.witnesses_verified;
        }
        groups.push_back(std::move(gj));
    }
    report["proportional_groups"] = std::move(groups);
}

template <class R>
void darboux_section(const AbelEquation<R>& eq, const std::vector<InvariantCurve<R>>& curves,
                     Json& report) {
    Json d;
    std::optional<DarbouxCertificate> cert;
    if (!curves.empty()) cert = cofactor_dependence(eq, curves);
    d["found"] = cert.has_value();
    Json alphas = Json::array();
    if (cert) {
        d["alpha0"] = "0";
        for (const auto& a : cert->alphas) alphas.push_back(str(a));
        auto integral = first_integral(*cert, curves);
        d["integral"] = integral.rendered;
    }
    d["alphas"] = std::move(alphas);
    try {
        auto threshold = integrability_threshold(eq);
        const char* names[] = {"integrable-if-exceeded", "rational-limit-cycle-bound",
                               "invariant-curve-bound"};
        d["threshold"] = Json{{"value", threshold.value},
                              {"meaning", names[static_cast<int>(threshold.meaning)]}};
    } catch (const DomainError&) {
        d["threshold"] = nullptr;
    }
    report["darboux"] = std::move(d);
}

template <class R>
void numeric_section(const AbelEquation<R>& eq, const std::vector<InvariantCurve<R>>& curves,
                     const AnalyzeOptions& opts, Json& report) {
    using T = RingTraits<R>;
    Json n;
    const double pi = std::acos(-1.0);
    double lo = T::is_trig ? 0.0 : -10.0;
    double hi = T::is_trig ? 2 * pi : 10.0;
    Json residuals = Json::array();
    for (std::size_t i = 0; i < curves.size(); ++i) {
        double worst = residual_sample(eq, curves[i].p_ext(), opts.samples, lo, hi);
        residuals.push_back(Json{{"curve", i + 1}, {"max", worst}});
    }
    n["residuals"] = std::move(residuals);
    if constexpr (T::is_trig) {
        Json fixed = Json::array();
        for (std::size_t i = 0; i < curves.size(); ++i) {
            double x0 = 1.0 / eval_double(curves[i].p_ext(), 0.0);
            try {
                double defect = poincare_fixed_point_defect(eq, curves[i].p_ext(), opts.trajectory);
                fixed.push_back(Json{{"curve", i + 1}, {"x0", x0}, {"defect", defect}});
            } catch (const BlowUpError& b) {
                fixed.push_back(
                    Json{{"curve", i + 1}, {"x0", x0}, {"blow_up_at", b.escape_time}});
            }
        }
        n["poincare_fixed_points"] = std::move(fixed);
        if (eq.C.is_constant()) {
            try {
                auto probe = displacement_derivative(eq, 1e-4, opts.trajectory);
                n["displacement_derivative"] =
                    Json{{"estimate", probe.estimate}, {"reference", probe.reference}};
            } catch (const BlowUpError& b) {
                n["displacement_derivative"] = Json{{"blow_up_at", b.escape_time}};
            }
        }
    }
    report["numeric"] = std::move(n);
}

}  // namespace detail

// Full pipeline: curves, structure laws, Darboux, classification, audit,
// numeric cross-checks. Throws InternalInconsistencyError if any verified
// law fails, so an emitted report always passed its own invariants.
template <class R>
Json analyze(const AbelEquation<R>& eq, const AnalyzeOptions& opts = {}) {
    using T = RingTraits<R>;
    eq.validate();
    Json report;
    report["equation"] = equation_to_json(eq);
    Json notes = Json::array();

    int skipped_roots = 0;
    auto curves = find_invariant_curves(eq, opts.jobs, &skipped_roots);
    Json curve_list = Json::array();
    for (std::size_t i = 0; i < curves.size(); ++i)
        curve_list.push_back(curve_to_json(curves[i], eq, i));
    report["curves"] = std::move(curve_list);
    if (skipped_roots > 0)
        notes.push_back(std::to_string(skipped_roots) +
                        " constant root(s) outside the supported quadratic extensions were "
                        "skipped; curves over larger fields are not searched");
    if constexpr (T::is_trig) {
        if (!trig_nonvanishing(eq.A))
            notes.push_back(
                "A vanishes on the reals: divisor enumeration uses one fixed factorization and "
                "completeness in this degenerate regime is not claimed");
    }

    detail::structure_sections(eq, curves, report);
    detail::darboux_section(eq, curves, report);

    BoundReport bound = classify_bounds(eq);
    report["bound"] = bound_to_json(bound);

    auto audit_outcome = audit(eq, curves.size(), bound);
    report["audit"] =
        Json{{"status", audit_outcome.status == AuditStatus::Pass ? "pass" : "not-auditable"},
             {"note", audit_outcome.note}};

    if (opts.with_numeric) detail::numeric_section(eq, curves, opts, report);
    report["notes"] = std::move(notes);
    return report;
}

inline Json analyze(const AnyEquation& eq, const AnalyzeOptions& opts = {}) {
    return std::visit([&](const auto& e) { return analyze(e, opts); }, eq);
}

}  // namespace abel
