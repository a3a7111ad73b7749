#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abel/curves.hpp"

namespace abel {

// Deterministic generator state; identical seeds give identical instances on
// every platform, which the test harnesses rely on.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed * 6364136223846793005ULL + 1) {
        if (state == 0) state = 1;  // xorshift has a fixed point at 0
    }
    std::uint64_t u64() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational rational(long lo, long hi, long max_den = 2) {
        long den = range(1, max_den);
        return rational_of(range(lo * den, hi * den), den);
    }
    Rational nonzero_rational(long lo, long hi, long max_den = 2) {
        for (int i = 0; i < 64; ++i) {
            Rational r = rational(lo, hi, max_den);
            if (!is_zero(r)) return r;
        }
        return Rational(1);
    }
};

template <class R>
struct GeneratedInstance {
    AbelEquation<R> eq;
    std::vector<InvariantCurve<R>> curves;  // prescribed, invariant by construction
    std::string mode;
};

namespace detail {

template <class R>
InvariantCurve<R> as_curve(const R& p) {
    using T = RingTraits<R>;
    auto [base, unit] = T::canonical(p);
    return {base, typename T::ExtScalar{unit}};
}

template <class R>
void check_curve_material(const R& p, const char* who) {
    using T = RingTraits<R>;
    if (T::is_zero(p) || p.is_constant())
        throw DomainError(std::string(who) + " must be non-constant");
    if (!T::nonvanishing(p))
        throw DomainError(std::string(who) + " must be nonvanishing on the reals");
}

}  // namespace detail

// Equation with the prescribed invariant curve p x - 1 = 0:
// A = p m, B = -(m + p' + p C).
template <class R>
GeneratedInstance<R> gen_single(const R& p, const R& m, const R& C) {
    using T = RingTraits<R>;
    detail::check_curve_material(p, "p");
    if (T::is_zero(m)) throw DomainError("m must be nonzero");
    R A = p * m;
    R B = -(m + p.derivative() + p * C);
    if (T::is_zero(B)) throw DomainError("construction degenerated to B == 0: excluded case");
    GeneratedInstance<R> out{{A, B, C}, {detail::as_curve(p)}, "single"};
    out.eq.validate();
    auto check = verify_invariance<R>(out.curves[0].p_ext(),
                                      typename T::ExtScalar{-scalar_one<typename T::Scalar>()},
                                      out.eq);
    if (!check.ok) throw InternalInconsistencyError("gen_single produced a non-invariant curve");
    return out;
}

// Equation with the prescribed pair p1 = q s1, p2 = q s2, s2 = s1 + k qhat:
// A = q s1 s2 s with s = q' + q (C + qhat'/qhat), B from the curve condition.
// Both curves are certified invariant after construction, which also pins
// the sign of the q' term in s.
template <class R>
GeneratedInstance<R> gen_pair(const R& q, const R& s1, const typename RingTraits<R>::Scalar& k,
                              const R& qhat, const R& C) {
    using T = RingTraits<R>;
    if (abel::is_zero(k)) throw DomainError("k must be nonzero");
    if (T::is_zero(q) || T::is_zero(s1)) throw DomainError("q and s1 must be nonzero");
    if (T::is_zero(qhat)) throw DomainError("qhat must be nonzero");
    R s2 = s1 + T::constant(k) * qhat;
    R p1 = q * s1;
    R p2 = q * s2;
    detail::check_curve_material(p1, "p1 = q s1");
    detail::check_curve_material(p2, "p2 = q s2");
    // gcd(s1, s2) must be 1
    R g = [&] {
        if constexpr (T::is_trig)
            return trig_gcd(s1, s2);
        else
            return gcd(s1, s2);
    }();
    if (g.degree() != 0) throw DomainError("s1 and s1 + k qhat must be coprime");
    // q * qhat' / qhat must be a ring element (qhat built from factors of q)
    auto shared = T::exact_divide(q * qhat.derivative(), qhat);
    if (!shared)
        throw DomainError("qhat must be constant or a product of irreducible factors of q");
    R s = q.derivative() + q * C + *shared;
    if (T::is_zero(s)) throw DomainError("construction degenerated to s == 0");
    R A = q * s1 * s2 * s;
    R B = [&] {
        auto m1 = T::exact_divide(A, p1);
        if (!m1) throw InternalInconsistencyError("A not divisible by p1");
        return -(*m1 + p1.derivative() + p1 * C);
    }();
    if (T::is_zero(B)) throw DomainError("construction degenerated to B == 0: excluded case");
    GeneratedInstance<R> out{{A, B, C}, {detail::as_curve(p1), detail::as_curve(p2)}, "pair"};
    out.eq.validate();
    for (const auto& c : out.curves) {
        auto check = verify_invariance<R>(
            c.p_ext(), typename T::ExtScalar{-scalar_one<typename T::Scalar>()}, out.eq);
        if (!check.ok)
            throw InternalInconsistencyError("sign-resolution inconsistency in gen_pair");
    }
    sort_curves(out.curves);
    return out;
}

// Equation with the proportional pair p x - 1 = 0 and K p x - 1 = 0:
// A = K p (p' + p C), B = -(K+1)(p' + p C).
template <class R>
GeneratedInstance<R> gen_proportional(const R& p, const typename RingTraits<R>::Scalar& K,
                                      const R& C) {
    using T = RingTraits<R>;
    using Scalar = typename T::Scalar;
    if (abel::is_zero(K) || is_one(K)) throw DomainError("K must avoid 0 and 1");
    if (K == -scalar_one<Scalar>())
        throw DomainError("K = -1 forces B == 0: excluded case");
    detail::check_curve_material(p, "p");
    R w = p.derivative() + p * C;
    if (T::is_zero(w)) throw DomainError("p' + p C vanished: no proportional family");
    R A = T::constant(K) * p * w;
    R B = -(T::constant(K + scalar_one<Scalar>()) * w);
    GeneratedInstance<R> out{{A, B, C}, {}, "proportional"};
    out.eq.validate();
    auto [base, unit] = T::canonical(p);
    out.curves.push_back({base, typename T::ExtScalar{unit}});
    out.curves.push_back({base, typename T::ExtScalar{unit * K}});
    for (const auto& c : out.curves) {
        auto check = verify_invariance<R>(
            c.p_ext(), typename T::ExtScalar{-scalar_one<Scalar>()}, out.eq);
        if (!check.ok)
            throw InternalInconsistencyError("gen_proportional produced a non-invariant curve");
    }
    sort_curves(out.curves);
    return out;
}

namespace detail {

// Nonvanishing building blocks with certified positivity.
inline PolyQ random_nonvanishing(Rng& rng, int max_quadratics, PolyQ*) {
    int nq = static_cast<int>(rng.range(1, std::max(1, max_quadratics)));
    PolyQ p(Rational(1));
    for (int i = 0; i < nq; ++i) {
        Rational a = rng.rational(-2, 2);
        Rational b = (a * a + rng.range(1, 4)) / 4;  // discriminant a^2 - 4b < 0
        p = p * PolyQ::from_coeffs({b, a, Rational(1)});
    }
    return p;
}

inline PolyQi random_nonvanishing(Rng& rng, int max_factors, PolyQi*) {
    int nf = static_cast<int>(rng.range(1, std::max(1, max_factors)));
    PolyQi p(GaussianRational{Rational(1)});
    for (int i = 0; i < nf; ++i) {
        GaussianRational root{rng.rational(-2, 2), rng.nonzero_rational(-2, 2)};
        p = p * PolyQi::from_coeffs({-root, GaussianRational{Rational(1)}});
    }
    return p;
}

inline TrigQ random_nonvanishing(Rng& rng, int max_factors, TrigQ*) {
    int nf = static_cast<int>(rng.range(1, std::max(1, max_factors)));
    TrigQ p = TrigQ::constant(Rational(1));
    for (int i = 0; i < nf; ++i) {
        Rational a = rng.rational(-1, 1);
        Rational b = rng.rational(-1, 1);
        Rational a0 = abs(a) + abs(b) + rng.range(1, 2);  // dominant constant term
        p = p * TrigQ::from_parts(a0, {{a, b}});
    }
    return p;
}

inline PolyQ random_element(Rng& rng, int max_degree, PolyQ*) {
    int deg = static_cast<int>(rng.range(0, std::max(0, max_degree)));
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(rng.rational(-3, 3));
    auto p = PolyQ::from_coeffs(std::move(c));
    return p.is_zero_poly() ? PolyQ(Rational(1)) : p;
}

inline PolyQi random_element(Rng& rng, int max_degree, PolyQi*) {
    int deg = static_cast<int>(rng.range(0, std::max(0, max_degree)));
    std::vector<GaussianRational> c;
    for (int i = 0; i <= deg; ++i)
        c.push_back(GaussianRational{rng.rational(-3, 3), rng.rational(-2, 2)});
    auto p = PolyQi::from_coeffs(std::move(c));
    return p.is_zero_poly() ? PolyQi(GaussianRational{Rational(1)}) : p;
}

inline TrigQ random_element(Rng& rng, int max_degree, TrigQ*) {
    int deg = static_cast<int>(rng.range(0, std::max(0, max_degree)));
    std::vector<std::pair<Rational, Rational>> h;
    for (int n = 1; n <= deg; ++n) h.emplace_back(rng.rational(-2, 2), rng.rational(-2, 2));
    auto p = TrigQ::from_parts(rng.rational(-2, 2), std::move(h));
    return p.is_zero_elem() ? TrigQ::constant(Rational(1)) : p;
}

}  // namespace detail

// Reproducible random instance with known ground-truth curves. Bounded
// rejection sampling; degree_cap limits deg(A). mode_name picks a fixed
// construction ("single", "pair", "proportional") or lets the seed decide.
template <class R>
GeneratedInstance<R> random_instance(std::uint64_t seed, int degree_cap,
                                     const std::string& mode_name = "random") {
    using T = RingTraits<R>;
    if (degree_cap < 1) throw DomainError("degree cap must be at least 1");
    Rng rng(seed);
    R* tag = nullptr;
    const int block_cap = T::is_trig ? 1 : 2;
    int forced_mode = -1;
    if (mode_name == "single") forced_mode = 0;
    else if (mode_name == "pair") forced_mode = 1;
    else if (mode_name == "proportional") forced_mode = 2;
    else if (mode_name != "random") throw DomainError("unknown generator mode " + mode_name);
    for (int attempt = 0; attempt < 256; ++attempt) {
        try {
            int mode = forced_mode >= 0 ? forced_mode : static_cast<int>(rng.range(0, 2));
            GeneratedInstance<R> out = [&] {
                if (mode == 0) {
                    R p = detail::random_nonvanishing(rng, block_cap, tag);
                    R m = detail::random_element(rng, T::is_trig ? 1 : 2, tag);
                    R C = detail::random_element(rng, 1, tag);
                    return gen_single(p, m, C);
                }
                if (mode == 1) {
                    bool with_q = rng.range(0, 1) == 1;
                    R q = with_q ? detail::random_nonvanishing(rng, 1, tag) : T::one();
                    R s1 = detail::random_nonvanishing(rng, 1, tag);
                    auto k = typename T::Scalar{rng.nonzero_rational(-2, 2)};
                    R C = detail::random_element(rng, 1, tag);
                    return gen_pair(q, s1, k, T::one(), C);
                }
                R p = detail::random_nonvanishing(rng, 1, tag);
                Rational base = rng.nonzero_rational(-3, 3);
                if (is_one(base) || base == Rational(-1)) base = Rational(2);
                auto K = typename T::Scalar{base};
                R C = detail::random_element(rng, 1, tag);
                return gen_proportional(p, K, C);
            }();
            if (out.eq.A.degree() > degree_cap) continue;
            return out;
        } catch (const DomainError&) {
            continue;  // resample
        } catch (const OutOfScopeError&) {
            continue;
        }
    }
    throw DomainError("degree cap too small to satisfy the generator preconditions");
}

}  // namespace abel
