#pragma once

#include <algorithm>
#include <vector>

#include "abel/poly_factor.hpp"
#include "abel/poly_roots.hpp"
#include "abel/trig.hpp"

namespace abel {

// Exact half-angle carrier for the trig ring. With u = tan(t/2),
//
//   p(t) = s(u) / (1 + u^2)^N,   s in Q[u],  deg s <= 2N,
//
// and p is recovered from (s, pi_order) where pi_order = 2N - deg s is the
// vanishing order of p at t = pi. The map p -> s is multiplicative, real
// zeros of p away from pi are real roots of s, and q | p in the trig ring
// iff s_q | s_p and pi_order(q) <= pi_order(p). (1 + u^2) never divides s.
// This reduces trig factorization questions to rational polynomial ones;
// roots of s off the real line correspond to the Laurent root pairs
// (rho, 1/conj(rho)) lying off the unit circle.
struct HalfAngleForm {
    PolyQ s;
    int pi_order = 0;

    int trig_degree() const { return (s.degree() + pi_order) / 2; }
};

inline HalfAngleForm half_angle(const TrigQ& p) {
    if (p.is_zero_elem()) throw DomainError("half-angle form of the zero element");
    auto lm = to_laurent(p);
    int n = lm.offset;
    // s(u) = sum_j d_j (1 + iu)^j (1 - iu)^(2N - j)
    PolyQi plus = PolyQi::from_coeffs({GaussianRational{Rational(1)},
                                       GaussianRational{Rational(0), Rational(1)}});
    PolyQi minus = PolyQi::from_coeffs({GaussianRational{Rational(1)},
                                        GaussianRational{Rational(0), Rational(-1)}});
    std::vector<PolyQi> plus_pow{PolyQi(GaussianRational{Rational(1)})};
    std::vector<PolyQi> minus_pow{PolyQi(GaussianRational{Rational(1)})};
    for (int j = 1; j <= 2 * n; ++j) {
        plus_pow.push_back(plus_pow.back() * plus);
        minus_pow.push_back(minus_pow.back() * minus);
    }
    PolyQi acc;
    for (int j = 0; j <= 2 * n; ++j) {
        GaussianRational d = lm.poly.coeff(j);
        if (is_zero(d)) continue;
        acc = acc + PolyQi(d) * plus_pow[static_cast<std::size_t>(j)] *
                        minus_pow[static_cast<std::size_t>(2 * n - j)];
    }
    PolyQ s = detail::real_part_poly(acc);
    return {s, 2 * n - s.degree()};
}

// Trig polynomial of degree n with half-angle numerator f (deg f + pi order
// = 2n). Requires f(i) != 0, which holds for every half-angle numerator.
inline TrigQ from_half_angle(const PolyQ& f, int n) {
    if (f.is_zero_poly()) return {};
    if (f.degree() > 2 * n) throw DomainError("half-angle numerator degree exceeds carrier");
    PolyQi zm = PolyQi::from_coeffs({GaussianRational{Rational(-1)}, GaussianRational{Rational(1)}});
    PolyQi zp = PolyQi::from_coeffs({GaussianRational{Rational(1)}, GaussianRational{Rational(1)}});
    std::vector<PolyQi> zm_pow{PolyQi(GaussianRational{Rational(1)})};
    std::vector<PolyQi> zp_pow{PolyQi(GaussianRational{Rational(1)})};
    for (int j = 1; j <= 2 * n; ++j) {
        zm_pow.push_back(zm_pow.back() * zm);
        zp_pow.push_back(zp_pow.back() * zp);
    }
    GaussianRational mi{Rational(0), Rational(-1)};  // -i
    GaussianRational power{Rational(1)};
    PolyQi w;
    for (int j = 0; j <= f.degree(); ++j) {
        Rational fj = f.coeff(j);
        if (!is_zero(fj)) {
            w = w + PolyQi(GaussianRational{fj} * power) * zm_pow[static_cast<std::size_t>(j)] *
                        zp_pow[static_cast<std::size_t>(2 * n - j)];
        }
        power = power * mi;
    }
    Rational scale(1);
    for (int i = 0; i < n; ++i) scale /= 4;
    LaurentModel<Rational> lm{w.map([&](const GaussianRational& c) {
                                  return GaussianRational{c.re * scale, c.im * scale};
                              }),
                              n};
    if (lm.poly.degree() != 2 * n) throw DomainError("half-angle reconstruction degenerated");
    return from_laurent(lm);
}

// p(t) != 0 for all real t: no real root of s and no zero at pi.
inline bool trig_nonvanishing(const TrigQ& p) {
    if (p.is_zero_elem()) throw DomainError("nonvanishing test on the zero element");
    if (p.is_constant()) return true;
    HalfAngleForm hf = half_angle(p);
    if (hf.pi_order > 0) return false;
    return !has_real_root(hf.s);
}

// gcd normalized to the canonical highest-harmonic form. The common content
// (g, m) of the half-angle forms is a trig element whenever deg g + m is
// even, and that element is the unique maximal common divisor. With odd
// parity one odd unit (a zero at pi, or one copy of an odd-degree real
// factor) must be dropped; the call refuses when several distinct drops
// exist, which is exactly the shared-zero ambiguity of the half-factorial
// regime. With one argument nonvanishing the parity is always even.
inline TrigQ trig_gcd(const TrigQ& a, const TrigQ& b) {
    if (a.is_zero_elem() && b.is_zero_elem()) throw DomainError("gcd of two zero trig elements");
    if (a.is_zero_elem()) return trig_canonical(b).first;
    if (b.is_zero_elem()) return trig_canonical(a).first;
    HalfAngleForm ha = half_angle(a);
    HalfAngleForm hb = half_angle(b);
    int m = std::min(ha.pi_order, hb.pi_order);
    PolyQ g = gcd(ha.s, hb.s);
    if ((g.degree() + m) % 2 != 0) {
        std::vector<PolyQ> drops;
        if (g.degree() > 0) {
            for (const auto& [f, mult] : factor(g).factors)
                if (f.degree() % 2 != 0 && count_real_roots(f) > 0) drops.push_back(f);
        }
        int options = static_cast<int>(drops.size()) + (m > 0 ? 1 : 0);
        if (options != 1)
            throw DomainError("gcd-ambiguous: both arguments vanish on a shared zero set");
        if (m > 0)
            --m;
        else
            g = *exact_div(g, drops.front());
    }
    if (g.is_constant() && m == 0) return TrigQ::constant(Rational(1));
    return trig_canonical(from_half_angle(g.monic(), (g.degree() + m) / 2)).first;
}

struct TrigOrbit {
    TrigQ factor;  // canonical monic-normalized irreducible block over Q
    int multiplicity = 1;
    bool vanishing = false;  // has a real zero (Laurent roots on the unit circle)
};

struct TrigOrbits {
    Rational unit;
    std::vector<TrigOrbit> orbits;
};

// Complete factorization of a trig polynomial into rationally irreducible
// blocks. Nonvanishing blocks are the unique irreducible content; vanishing
// content (real roots of s plus the order at pi) admits several groupings
// into degree-matched trig factors, so it is emitted in one deterministic
// canonical grouping. The product of all blocks times the unit reproduces
// the input exactly.
inline TrigOrbits trig_divisor_orbits(const TrigQ& a) {
    if (a.is_zero_elem() || a.is_constant())
        throw DomainError("divisor orbits need a nonzero, non-constant element");
    HalfAngleForm hf = half_angle(a);
    std::vector<TrigOrbit> orbits;
    int pi_units = hf.pi_order;

    std::vector<PolyQ> odd_copies;
    if (hf.s.degree() > 0) {
        auto fac = factor(hf.s);
        for (const auto& [f, mult] : fac.factors) {
            bool vanishes = count_real_roots(f) > 0;
            if (!vanishes || f.degree() % 2 == 0) {
                orbits.push_back(
                    {trig_canonical(from_half_angle(f, f.degree() / 2)).first, mult, vanishes});
            } else {
                for (int c = 0; c < mult; ++c) odd_copies.push_back(f);
            }
        }
    }
    // Odd-degree real-rooted numerators cannot stand alone; pair each with a
    // zero at pi when available, otherwise with the next odd numerator.
    for (std::size_t i = 0; i < odd_copies.size();) {
        if (pi_units > 0) {
            const PolyQ& f = odd_copies[i];
            orbits.push_back(
                {trig_canonical(from_half_angle(f, (f.degree() + 1) / 2)).first, 1, true});
            --pi_units;
            ++i;
        } else {
            if (i + 1 >= odd_copies.size())
                throw DomainError("vanishing content parity mismatch");
            PolyQ f = odd_copies[i] * odd_copies[i + 1];
            orbits.push_back({trig_canonical(from_half_angle(f, f.degree() / 2)).first, 1, true});
            i += 2;
        }
    }
    if (pi_units % 2 != 0) throw DomainError("vanishing content parity mismatch");
    if (pi_units > 0) {
        TrigQ pi_block = TrigQ::from_parts(Rational(1), {{Rational(1), Rational(0)}});  // 1+cos t
        orbits.push_back({pi_block, pi_units / 2, true});
    }

    // Merge equal blocks produced by the per-copy pairing.
    std::sort(orbits.begin(), orbits.end(), [](const TrigOrbit& x, const TrigOrbit& y) {
        if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
        auto key = [](const TrigQ& p) {
            std::vector<Rational> v{p.constant_term()};
            for (const auto& [c, s] : p.harmonics()) {
                v.push_back(c);
                v.push_back(s);
            }
            return v;
        };
        return key(x.factor) < key(y.factor);
    });
    std::vector<TrigOrbit> merged;
    for (auto& o : orbits) {
        if (!merged.empty() && merged.back().factor == o.factor)
            merged.back().multiplicity += o.multiplicity;
        else
            merged.push_back(std::move(o));
    }

    TrigQ prod = TrigQ::constant(Rational(1));
    for (const auto& o : merged)
        prod = prod * o.factor.pow_u(static_cast<unsigned>(o.multiplicity));
    auto q = trig_exact_div(a, prod);
    if (!q || !q->is_constant() || q->is_zero_elem())
        throw DomainError("orbit factorization self-check failed");
    return {q->constant_term(), std::move(merged)};
}

}  // namespace abel
