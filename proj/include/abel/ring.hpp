#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abel/poly_factor.hpp"
#include "abel/quad.hpp"
#include "abel/trig_factor.hpp"

namespace abel {

enum class RingKind { PolyRational, PolyGaussian, Trig };

inline std::string ring_name(RingKind k) {
    switch (k) {
        case RingKind::PolyRational: return "poly-rational";
        case RingKind::PolyGaussian: return "poly-gaussian";
        case RingKind::Trig: return "trig";
    }
    return "?";
}

inline std::optional<RingKind> ring_from_name(const std::string& s) {
    if (s == "poly-rational") return RingKind::PolyRational;
    if (s == "poly-gaussian") return RingKind::PolyGaussian;
    if (s == "trig") return RingKind::Trig;
    return std::nullopt;
}

// Deterministic orderings for report canonicalization.
inline bool scalar_less(const Rational& x, const Rational& y) { return x < y; }
inline bool scalar_less(const GaussianRational& x, const GaussianRational& y) {
    if (x.re != y.re) return x.re < y.re;
    return x.im < y.im;
}
template <class S>
bool scalar_less(const Quad<S>& x, const Quad<S>& y) {
    if (!(x.a == y.a)) return scalar_less(x.a, y.a);
    if (!(x.b == y.b)) return scalar_less(x.b, y.b);
    return x.d < y.d;
}
template <class S>
bool vector_less(const std::vector<S>& x, const std::vector<S>& y) {
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        if (!(x[i] == y[i])) return scalar_less(x[i], y[i]);
    }
    return x.size() < y.size();
}

// One irreducible block of the analyzed ring element, canonically normalized.
template <class R>
struct RingAtom {
    R factor;
    int multiplicity = 1;
    bool nonvanishing = false;
};

namespace detail {

template <class S>
std::vector<S> poly_flatten(const Polynomial<S>& p, int size) {
    std::vector<S> v(static_cast<std::size_t>(size), S{});
    for (int i = 0; i <= p.degree() && i < size; ++i) v[static_cast<std::size_t>(i)] = p.coeff(i);
    return v;
}

template <class S>
std::vector<S> trig_flatten(const TrigPoly<S>& p, int harmonics) {
    std::vector<S> v;
    v.reserve(static_cast<std::size_t>(2 * harmonics) + 1);
    v.push_back(p.constant_term());
    for (int n = 1; n <= harmonics; ++n) {
        auto [a, b] = p.harmonic(n);
        v.push_back(a);
        v.push_back(b);
    }
    return v;
}

}  // namespace detail

template <class R>
struct RingTraits;

template <>
struct RingTraits<PolyQ> {
    using Elem = PolyQ;
    using Scalar = Rational;
    using ExtScalar = Quad<Rational>;
    using ExtElem = Polynomial<Quad<Rational>>;
    static constexpr RingKind kind = RingKind::PolyRational;
    static constexpr bool is_trig = false;

    static bool is_zero(const Elem& p) { return p.is_zero_poly(); }
    static bool ext_is_zero(const ExtElem& p) { return p.is_zero_poly(); }
    static Elem one() { return Elem(Rational(1)); }
    static Elem constant(Scalar c) { return Elem(std::move(c)); }
    static Scalar constant_value(const Elem& p) { return p.coeff(0); }
    static std::optional<Elem> exact_divide(const Elem& a, const Elem& b) {
        return exact_div(a, b);
    }
    static std::optional<ExtElem> exact_divide_ext(const ExtElem& a, const ExtElem& b) {
        return exact_div(a, b);
    }
    static bool nonvanishing(const Elem& p) { return nonvanishing_on_reals(p); }
    static std::pair<Elem, Scalar> canonical(const Elem& p) {
        return {p.monic(), p.leading()};
    }
    static ExtElem to_ext(const Elem& p) {
        return p.map([](const Rational& c) { return ExtScalar{c}; });
    }
    static std::optional<Elem> from_ext(const ExtElem& p) {
        for (const auto& c : p.coeffs())
            if (!abel::is_zero(c.b)) return std::nullopt;
        return p.map([](const ExtScalar& c) { return c.a; });
    }
    static std::vector<RingAtom<Elem>> atoms(const Elem& a) {
        std::vector<RingAtom<Elem>> out;
        for (const auto& [f, m] : factor(a).factors)
            out.push_back({f, m, nonvanishing_on_reals(f)});
        return out;
    }
    static int flat_size(const Elem& p) { return p.degree() + 1; }
    static std::vector<Scalar> flatten(const Elem& p, int size) {
        return detail::poly_flatten(p, size);
    }
    static int ext_flat_size(const ExtElem& p) { return p.degree() + 1; }
    static std::vector<ExtScalar> flatten_ext(const ExtElem& p, int size) {
        return detail::poly_flatten(p, size);
    }
};

template <>
struct RingTraits<PolyQi> {
    using Elem = PolyQi;
    using Scalar = GaussianRational;
    using ExtScalar = Quad<GaussianRational>;
    using ExtElem = Polynomial<Quad<GaussianRational>>;
    static constexpr RingKind kind = RingKind::PolyGaussian;
    static constexpr bool is_trig = false;

    static bool is_zero(const Elem& p) { return p.is_zero_poly(); }
    static bool ext_is_zero(const ExtElem& p) { return p.is_zero_poly(); }
    static Elem one() { return Elem(Scalar{Rational(1)}); }
    static Elem constant(Scalar c) { return Elem(std::move(c)); }
    static Scalar constant_value(const Elem& p) { return p.coeff(0); }
    static std::optional<Elem> exact_divide(const Elem& a, const Elem& b) {
        return exact_div(a, b);
    }
    static std::optional<ExtElem> exact_divide_ext(const ExtElem& a, const ExtElem& b) {
        return exact_div(a, b);
    }
    static bool nonvanishing(const Elem& p) { return nonvanishing_on_reals(p); }
    static std::pair<Elem, Scalar> canonical(const Elem& p) {
        return {p.monic(), p.leading()};
    }
    static ExtElem to_ext(const Elem& p) {
        return p.map([](const Scalar& c) { return ExtScalar{c}; });
    }
    static std::optional<Elem> from_ext(const ExtElem& p) {
        for (const auto& c : p.coeffs())
            if (!abel::is_zero(c.b)) return std::nullopt;
        return p.map([](const ExtScalar& c) { return c.a; });
    }
    static std::vector<RingAtom<Elem>> atoms(const Elem& a) {
        std::vector<RingAtom<Elem>> out;
        for (const auto& [f, m] : factor(a).factors)
            out.push_back({f, m, nonvanishing_on_reals(f)});
        return out;
    }
    static int flat_size(const Elem& p) { return p.degree() + 1; }
    static std::vector<Scalar> flatten(const Elem& p, int size) {
        return detail::poly_flatten(p, size);
    }
    static int ext_flat_size(const ExtElem& p) { return p.degree() + 1; }
    static std::vector<ExtScalar> flatten_ext(const ExtElem& p, int size) {
        return detail::poly_flatten(p, size);
    }
};

template <>
struct RingTraits<TrigQ> {
    using Elem = TrigQ;
    using Scalar = Rational;
    using ExtScalar = Quad<Rational>;
    using ExtElem = TrigPoly<Quad<Rational>>;
    static constexpr RingKind kind = RingKind::Trig;
    static constexpr bool is_trig = true;

    static bool is_zero(const Elem& p) { return p.is_zero_elem(); }
    static bool ext_is_zero(const ExtElem& p) { return p.is_zero_elem(); }
    static Elem one() { return Elem::constant(Rational(1)); }
    static Elem constant(Scalar c) { return Elem::constant(std::move(c)); }
    static Scalar constant_value(const Elem& p) { return p.constant_term(); }
    static std::optional<Elem> exact_divide(const Elem& a, const Elem& b) {
        return trig_exact_div(a, b);
    }
    static std::optional<ExtElem> exact_divide_ext(const ExtElem& a, const ExtElem& b) {
        return trig_exact_div(a, b);
    }
    static bool nonvanishing(const Elem& p) { return trig_nonvanishing(p); }
    static std::pair<Elem, Scalar> canonical(const Elem& p) { return trig_canonical(p); }
    static ExtElem to_ext(const Elem& p) {
        return p.map([](const Rational& c) { return ExtScalar{c}; });
    }
    static std::optional<Elem> from_ext(const ExtElem& p) {
        if (!abel::is_zero(p.constant_term().b)) return std::nullopt;
        for (const auto& [a, b] : p.harmonics())
            if (!abel::is_zero(a.b) || !abel::is_zero(b.b)) return std::nullopt;
        return p.map([](const ExtScalar& c) { return c.a; });
    }
    static std::vector<RingAtom<Elem>> atoms(const Elem& a) {
        std::vector<RingAtom<Elem>> out;
        for (const auto& o : trig_divisor_orbits(a).orbits)
            out.push_back({o.factor, o.multiplicity, !o.vanishing});
        return out;
    }
    static int flat_size(const Elem& p) { return 2 * std::max(p.degree(), 0) + 1; }
    static std::vector<Scalar> flatten(const Elem& p, int size) {
        return detail::trig_flatten(p, (size - 1) / 2);
    }
    static int ext_flat_size(const ExtElem& p) { return 2 * std::max(p.degree(), 0) + 1; }
    static std::vector<ExtScalar> flatten_ext(const ExtElem& p, int size) {
        return detail::trig_flatten(p, (size - 1) / 2);
    }
};

// Lift a plain ring element into the quadratic extension and scale by k.
template <class R>
typename RingTraits<R>::ExtElem ext_scaled(const R& p, const typename RingTraits<R>::ExtScalar& k) {
    return RingTraits<R>::to_ext(p) * k;
}

}  // namespace abel
