#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "abel/classify.hpp"
#include "abel/curves.hpp"

namespace abel {

using Json = nlohmann::ordered_json;

// Constants are stored structurally so reports reload without parsing surds.
inline Json scalar_to_json(const Rational& v) { return Json{{"kind", "rational"}, {"value", str(v)}}; }
inline Json scalar_to_json(const GaussianRational& v) {
    return Json{{"kind", "gaussian"}, {"re", str(v.re)}, {"im", str(v.im)}};
}
template <class S>
Json constant_to_json(const Quad<S>& k) {
    Json j;
    j["scalar"] = scalar_to_json(k.a);
    if (k.d != 0) {
        j["surd_coefficient"] = scalar_to_json(k.b);
        j["surd_index"] = k.d;
    }
    j["text"] = str(k);
    return j;
}

inline Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

inline Rational scalar_from_json(const Json& j, Rational*) {
    if (j.at("kind") != "rational") throw ParseError("expected a rational constant");
    return rational_from_json(j.at("value"));
}
inline GaussianRational scalar_from_json(const Json& j, GaussianRational*) {
    if (j.at("kind") == "rational") return GaussianRational{rational_from_json(j.at("value"))};
    if (j.at("kind") != "gaussian") throw ParseError("expected a gaussian constant");
    return {rational_from_json(j.at("re")), rational_from_json(j.at("im"))};
}

template <class S>
Quad<S> constant_from_json(const Json& j) {
    S* tag = nullptr;
    Quad<S> k{scalar_from_json(j.at("scalar"), tag)};
    if (j.contains("surd_index")) {
        k.b = scalar_from_json(j.at("surd_coefficient"), tag);
        k.d = j.at("surd_index").get<long>();
        if (is_zero(k.b)) k.d = 0;
    }
    return k;
}

template <class R>
Json curve_to_json(const InvariantCurve<R>& curve, const AbelEquation<R>& eq, std::size_t index) {
    using T = RingTraits<R>;
    Json j;
    j["index"] = index + 1;
    j["base"] = render(curve.base);
    Json coeffs = Json::array();
    for (const auto& c : T::flatten(curve.base, T::flat_size(curve.base)))
        coeffs.push_back(str(c));
    j["base_coefficients"] = coeffs;
    j["constant"] = constant_to_json(curve.k);
    if (auto plain = curve.p_plain()) j["p"] = render(*plain);
    auto cof = cofactor_of(curve, eq);
    j["cofactor"] = Json{{"K2", render(cof.k2)}, {"K1", render(cof.k1)}, {"K0", "0"}};
    j["verified"] = true;
    return j;
}

template <class R>
InvariantCurve<R> curve_from_json(const Json& j) {
    using T = RingTraits<R>;
    InvariantCurve<R> c{parse_ring_element<R>(j.at("base").get<std::string>()),
                        constant_from_json<typename T::Scalar>(j.at("constant"))};
    return c;
}

inline Json bound_to_json(const BoundReport& bound) {
    Json bj{{"case", bound_case_name(bound.label)},
            {"value", bound.value},
            {"meaning", bound_meaning_name(bound.meaning)},
            {"deg_A", bound.deg_a},
            {"deg_B", bound.deg_b},
            {"deg_C", bound.deg_c},
            {"ring", ring_name(bound.ring)},
            {"C_constant", bound.c_constant}};
    if (bound.darboux_threshold) bj["darboux_threshold"] = *bound.darboux_threshold;
    return bj;
}

// Reload a report and re-certify every listed curve against the equation it
// documents. Used by tests and by consumers that distrust stored reports.
inline bool revalidate_report(const Json& report) {
    AnyEquation eq = load_equation(report.at("equation"));
    return std::visit(
        [&](const auto& e) {
            using R = std::decay_t<decltype(e.A)>;
            using T = RingTraits<R>;
            for (const auto& cj : report.at("curves")) {
                auto curve = curve_from_json<R>(cj);
                auto minus_one = typename T::ExtScalar{-scalar_one<typename T::Scalar>()};
                if (!invariance_residual<R>(curve.p_ext(), minus_one, e).first) return false;
            }
            return true;
        },
        eq);
}

// Human-readable projection of the JSON report; never the source of truth.
inline std::string report_to_text(const Json& r) {
    std::string out;
    auto line = [&](const std::string& s) { out += s + "\n"; };
    const auto& eq = r.at("equation");
    line("ring: " + eq.at("ring").get<std::string>());
    line("A = " + eq.at("A").get<std::string>());
    line("B = " + eq.at("B").get<std::string>());
    line("C = " + eq.at("C").get<std::string>());
    if (r.contains("curves")) {
        line("invariant curves: " + std::to_string(r.at("curves").size()));
        for (const auto& c : r.at("curves")) {
            std::string text = "  [" + std::to_string(c.at("index").get<int>()) + "] (" +
                               c.at("base").get<std::string>() + ")*x - 1 = 0";
            std::string k = c.at("constant").at("text").get<std::string>();
            if (k != "1") text += "  scaled by " + k;
            line(text);
        }
    }
    if (r.contains("bound")) {
        const auto& b = r.at("bound");
        line("bound: case " + b.at("case").get<std::string>() + ", at most " +
             std::to_string(b.at("value").get<long long>()) + " " +
             b.at("meaning").get<std::string>());
        if (b.contains("darboux_threshold"))
            line("darboux threshold: " + std::to_string(b.at("darboux_threshold").get<long long>()));
    }
    if (r.contains("darboux")) {
        const auto& d = r.at("darboux");
        if (d.at("found").get<bool>())
            line("darboux certificate: " + d.at("integral").get<std::string>());
        else
            line("darboux certificate: none");
    }
    if (r.contains("audit"))
        line("audit: " + r.at("audit").at("status").get<std::string>() +
             (r.at("audit").contains("note") ? " (" + r.at("audit").at("note").get<std::string>() + ")"
                                             : ""));
    if (r.contains("numeric") && r.at("numeric").contains("residuals")) {
        for (const auto& res : r.at("numeric").at("residuals"))
            line("numeric residual curve " + std::to_string(res.at("curve").get<int>()) + ": " +
                 std::to_string(res.at("max").get<double>()));
    }
    if (r.contains("notes"))
        for (const auto& n : r.at("notes")) line("note: " + n.get<std::string>());
    return out;
}

}  // namespace abel
