#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "abel/parse.hpp"
#include "abel/ring.hpp"

namespace abel {

// The analyzed object: x' = A x^3 + B x^2 + C x with A, B, C in one ring.
// The standing assumptions (A, B, C all nonzero, deg A > 0) hold whenever an
// instance passes validate(); the excluded shapes are handled elsewhere in
// the literature and reported as out of scope.
template <class R>
struct AbelEquation {
    R A, B, C;

    void validate() const {
        using T = RingTraits<R>;
        if (T::is_zero(A))
            throw OutOfScopeError("A == 0 gives a Riccati equation: delegated case");
        if (T::is_zero(B))
            throw OutOfScopeError("B == 0 gives a Bernoulli equation: delegated case");
        if (T::is_zero(C))
            throw OutOfScopeError("C == 0 is covered by the companion analysis: delegated case");
        if (A.degree() <= 0)
            throw OutOfScopeError("constant A forces constant invariant curves: delegated case");
    }
};

using AnyEquation =
    std::variant<AbelEquation<PolyQ>, AbelEquation<PolyQi>, AbelEquation<TrigQ>>;

inline RingKind ring_kind(const AnyEquation& eq) {
    return std::visit(
        [](const auto& e) {
            using R = std::decay_t<decltype(e.A)>;
            return RingTraits<R>::kind;
        },
        eq);
}

// Equation document: {"ring": ..., "A": ..., "B": ..., "C": ...}.
inline AnyEquation load_equation(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("equation document must be a JSON object");
    for (const char* key : {"ring", "A", "B", "C"})
        if (!doc.contains(key) || !doc[key].is_string())
            throw ParseError(std::string("equation document needs string field '") + key + "'");
    auto kind = ring_from_name(doc["ring"].get<std::string>());
    if (!kind) throw ParseError("unknown ring '" + doc["ring"].get<std::string>() + "'");
    auto build = [&](auto parse_fn) -> AnyEquation {
        using R = decltype(parse_fn(std::string{}));
        AbelEquation<R> eq{parse_fn(doc["A"].get<std::string>()),
                           parse_fn(doc["B"].get<std::string>()),
                           parse_fn(doc["C"].get<std::string>())};
        eq.validate();
        return eq;
    };
    switch (*kind) {
        case RingKind::PolyRational:
            return build([](const std::string& s) { return parse_poly_rational(s); });
        case RingKind::PolyGaussian:
            return build([](const std::string& s) { return parse_poly_gaussian(s); });
        case RingKind::Trig:
            return build([](const std::string& s) { return parse_trig(s); });
    }
    throw ParseError("unreachable ring kind");
}

inline AnyEquation load_equation_text(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("invalid JSON in equation document");
    return load_equation(doc);
}

template <class R>
nlohmann::json equation_to_json(const AbelEquation<R>& eq) {
    return nlohmann::json{{"ring", ring_name(RingTraits<R>::kind)},
                          {"A", render(eq.A)},
                          {"B", render(eq.B)},
                          {"C", render(eq.C)}};
}

inline nlohmann::json equation_to_json(const AnyEquation& eq) {
    return std::visit([](const auto& e) { return equation_to_json(e); }, eq);
}

}  // namespace abel
