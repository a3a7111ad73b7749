#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "abel/gaussian.hpp"
#include "abel/poly_roots.hpp"
#include "abel/polynomial.hpp"
#include "abel/rational.hpp"

namespace abel {

using PolyQi = Polynomial<GaussianRational>;

template <class R>
struct Factorization {
    using Scalar = std::decay_t<decltype(std::declval<R>().leading())>;
    Scalar unit;                          // input = unit * prod(factors^mult)
    std::vector<std::pair<R, int>> factors;  // monic irreducible, multiplicity
};

// ---------------------------------------------------------------------------
// Square-free decomposition (Yun), over any field of characteristic zero.
// ---------------------------------------------------------------------------

template <class S>
std::vector<std::pair<Polynomial<S>, int>> squarefree_decomposition(const Polynomial<S>& f) {
    if (f.is_zero_poly() || f.is_constant())
        throw DomainError("square-free decomposition needs a non-constant polynomial");
    std::vector<std::pair<Polynomial<S>, int>> out;
    Polynomial<S> fm = f.monic();
    Polynomial<S> g = gcd(fm, fm.derivative());
    Polynomial<S> b = *exact_div(fm, g);
    Polynomial<S> c = *exact_div(fm.derivative(), g);
    Polynomial<S> d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Polynomial<S> a = gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = *exact_div(b, a);
        c = *exact_div(d, a);
        d = c - b.derivative();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Arithmetic mod a small prime, packaged as a scalar for Polynomial<>.
// ---------------------------------------------------------------------------

struct Fp {
    long v = 0;
    long p = 0;  // 0 marks an untagged zero; adopts the other operand's prime

    static long join(const Fp& x, const Fp& y) {
        if (x.p == 0) return y.p;
        if (y.p == 0 || x.p == y.p) return x.p;
        throw DomainError("mixed moduli in Fp arithmetic");
    }
    friend Fp operator+(const Fp& x, const Fp& y) {
        long p = join(x, y);
        return {(x.v + y.v) % p, p};
    }
    friend Fp operator-(const Fp& x, const Fp& y) {
        long p = join(x, y);
        return {((x.v - y.v) % p + p) % p, p};
    }
    friend Fp operator-(const Fp& x) { return {x.p == 0 ? 0 : (x.p - x.v) % x.p, x.p}; }
    friend Fp operator*(const Fp& x, const Fp& y) {
        long p = join(x, y);
        return {static_cast<long>((static_cast<long long>(x.v) * y.v) % p), p};
    }
    friend Fp operator/(const Fp& x, const Fp& y);
    friend bool operator==(const Fp& x, const Fp& y) { return x.v == y.v; }
};

inline bool is_zero(const Fp& x) { return x.v == 0; }
inline Fp mul_int(const Fp& x, long n) {
    if (x.p == 0) return x;
    long r = n % x.p;
    if (r < 0) r += x.p;
    return x * Fp{r, x.p};
}

inline long fp_inverse(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw DomainError("non-invertible element mod p");
    return t < 0 ? t + p : t;
}

inline Fp operator/(const Fp& x, const Fp& y) {
    long p = Fp::join(x, y);
    if (y.v == 0) throw DomainError("division by zero mod p");
    return x * Fp{fp_inverse(y.v, p), p};
}

using PolyFp = Polynomial<Fp>;

namespace detail {

inline PolyFp fp_poly(const std::vector<Integer>& coeffs, long p) {
    std::vector<Fp> c;
    c.reserve(coeffs.size());
    for (const auto& z : coeffs) {
        Integer r = z % p;
        if (sgn(r) < 0) r += p;
        c.push_back(Fp{r.get_si(), p});
    }
    return PolyFp::from_coeffs(std::move(c));
}

inline PolyFp fp_x(long p) { return PolyFp::from_coeffs({Fp{0, p}, Fp{1, p}}); }

inline PolyFp fp_powmod(PolyFp base, Integer e, const PolyFp& mod) {
    PolyFp result = PolyFp(Fp{1, base.is_zero_poly() ? mod.leading().p : base.leading().p});
    base = divrem(base, mod).second;
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = divrem(result * base, mod).second;
        base = divrem(base * base, mod).second;
        e >>= 1;
    }
    return result;
}

// Deterministic pseudo-random source for the equal-degree splitting.
struct SplitRng {
    std::uint64_t state;
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 16;
    }
};

inline void equal_degree_split(const PolyFp& f, int d, SplitRng& rng, std::vector<PolyFp>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    long p = f.leading().p;
    Integer e(1);
    for (int i = 0; i < d; ++i) e *= p;
    e = (e - 1) / 2;
    while (true) {
        std::vector<Fp> rc;
        for (int i = 0; i < f.degree(); ++i)
            rc.push_back(Fp{static_cast<long>(rng.next() % static_cast<std::uint64_t>(p)), p});
        PolyFp r = PolyFp::from_coeffs(std::move(rc));
        if (r.degree() < 1) continue;
        PolyFp w = fp_powmod(r, e, f) - PolyFp(Fp{1, p});
        if (w.is_zero_poly()) continue;
        PolyFp g = gcd(w, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(*exact_div(f, g), d, rng, out);
            return;
        }
    }
}

// Distinct-degree then equal-degree factorization of a square-free monic f.
inline std::vector<PolyFp> factor_mod_p(const PolyFp& f) {
    std::vector<PolyFp> out;
    long p = f.leading().p;
    PolyFp g = f.monic();
    PolyFp h = fp_x(p);
    SplitRng rng{0x9e3779b97f4a7c15ULL};
    for (int d = 1; 2 * d <= g.degree(); ++d) {
        h = fp_powmod(h, Integer(p), g);
        PolyFp w = gcd(h - fp_x(p), g);
        if (w.degree() > 0) {
            equal_degree_split(w, d, rng, out);
            g = *exact_div(g, w);
            h = divrem(h, g).second;
        }
    }
    if (g.degree() > 0) out.push_back(g.monic());
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Factorization over Z / Q: Hensel lifting of the mod-p splitting, then
// subset recombination against a coefficient bound.
// ---------------------------------------------------------------------------

namespace detail {

using ZVec = std::vector<Integer>;

inline void zv_trim(ZVec& v) {
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}
inline int zv_deg(const ZVec& v) { return static_cast<int>(v.size()) - 1; }

inline ZVec zv_mod(ZVec v, const Integer& m) {
    for (auto& c : v) {
        c %= m;
        if (sgn(c) < 0) c += m;
    }
    zv_trim(v);
    return v;
}

inline ZVec zv_mul(const ZVec& a, const ZVec& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    ZVec r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zv_mod(std::move(r), m);
}

inline ZVec zv_add(ZVec a, const ZVec& b, const Integer& m) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return zv_mod(std::move(a), m);
}

inline ZVec zv_sub(ZVec a, const ZVec& b, const Integer& m) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return zv_mod(std::move(a), m);
}

// Division by a monic divisor, coefficients mod m.
inline std::pair<ZVec, ZVec> zv_divrem_monic(ZVec a, const ZVec& b, const Integer& m) {
    if (b.empty() || b.back() != 1) throw DomainError("zv_divrem_monic needs a monic divisor");
    int db = zv_deg(b);
    if (zv_deg(a) < db) return {{}, std::move(a)};
    ZVec q(a.size() - b.size() + 1, Integer(0));
    for (int i = zv_deg(a); i >= db; --i) {
        Integer c = a[static_cast<std::size_t>(i)] % m;
        if (sgn(c) < 0) c += m;
        if (sgn(c) == 0) continue;
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto k = static_cast<std::size_t>(i - db + j);
            a[k] -= c * b[static_cast<std::size_t>(j)];
        }
    }
    return {zv_mod(std::move(q), m), zv_mod(std::move(a), m)};
}

struct HenselPair {
    ZVec g, h, s, t;
};

// One quadratic lift: factorization and Bezout data mod m become mod m^2.
inline HenselPair hensel_step(const ZVec& f, const HenselPair& in, const Integer& m) {
    Integer m2 = m * m;
    ZVec e = zv_sub(zv_mod(f, m2), zv_mul(in.g, in.h, m2), m2);
    auto [q, r] = zv_divrem_monic(zv_mul(in.s, e, m2), in.h, m2);
    ZVec g2 = zv_add(zv_add(in.g, zv_mul(in.t, e, m2), m2), zv_mul(q, in.g, m2), m2);
    ZVec h2 = zv_add(in.h, r, m2);
    ZVec one{Integer(1)};
    ZVec b = zv_sub(zv_add(zv_mul(in.s, g2, m2), zv_mul(in.t, h2, m2), m2), one, m2);
    auto [c, d] = zv_divrem_monic(zv_mul(in.s, b, m2), h2, m2);
    ZVec s2 = zv_sub(in.s, d, m2);
    ZVec t2 = zv_sub(zv_sub(in.t, zv_mul(in.t, b, m2), m2), zv_mul(c, g2, m2), m2);
    return {std::move(g2), std::move(h2), std::move(s2), std::move(t2)};
}

inline ZVec fp_to_zvec(const PolyFp& f) {
    ZVec v;
    for (const auto& c : f.coeffs()) v.emplace_back(c.v);
    return v;
}

// Bezout cofactors for coprime g, h mod p, with deg s < deg h, deg t < deg g.
inline std::pair<ZVec, ZVec> fp_bezout(const PolyFp& g, const PolyFp& h, long p) {
    PolyFp r0 = g, r1 = h;
    PolyFp s0 = PolyFp(Fp{1, p}), s1{};
    PolyFp t0{}, t1 = PolyFp(Fp{1, p});
    while (!r1.is_zero_poly()) {
        auto [q, r] = divrem(r0, r1);
        PolyFp s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.degree() != 0) throw DomainError("factors not coprime mod p");
    Fp inv = Fp{1, p} / r0.leading();
    PolyFp s = s0 * inv, t = t0 * inv;
    return {fp_to_zvec(s), fp_to_zvec(t)};
}

// Lift a mod-p factorization f == lc(f) * prod(monic factors) to mod p^target,
// recursing over a balanced factor tree.
inline void hensel_tree(const ZVec& f, const std::vector<PolyFp>& factors, std::size_t lo,
                        std::size_t hi, long p, const Integer& target, std::vector<ZVec>& out) {
    if (hi - lo == 1) {
        // Make monic mod target: multiply by the inverse of the leading coeff.
        ZVec g = zv_mod(f, target);
        Integer lead = g.back();
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), lead.get_mpz_t(), target.get_mpz_t()) == 0)
            throw DomainError("leading coefficient not invertible in Hensel lift");
        ZVec monic(g.size(), Integer(0));
        for (std::size_t i = 0; i < g.size(); ++i) monic[i] = g[i] * inv;
        out.push_back(zv_mod(std::move(monic), target));
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    PolyFp gp = PolyFp(Fp{1, p});
    for (std::size_t i = lo; i < mid; ++i) gp = gp * factors[i];
    PolyFp hp = PolyFp(Fp{1, p});
    for (std::size_t i = mid; i < hi; ++i) hp = hp * factors[i];
    Integer lead = f.back() % p;
    if (sgn(lead) < 0) lead += p;
    gp = gp * Fp{lead.get_si(), p};  // absorb lc into the left branch
    auto [s, t] = fp_bezout(gp, hp, p);
    HenselPair pair{fp_to_zvec(gp), fp_to_zvec(hp), std::move(s), std::move(t)};
    Integer m(p);
    while (m < target) {
        pair = hensel_step(f, pair, m);
        m = m * m;
    }
    ZVec g_lift = zv_mod(pair.g, target);
    ZVec h_lift = zv_mod(pair.h, target);
    hensel_tree(g_lift, factors, lo, mid, p, target, out);
    hensel_tree(h_lift, factors, mid, hi, p, target, out);
}

inline Integer zv_content(const ZVec& v) {
    Integer g(0);
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

inline ZVec zv_primitive(ZVec v) {
    zv_trim(v);
    if (v.empty()) return v;
    Integer g = zv_content(v);
    if (sgn(v.back()) < 0) g = -g;
    for (auto& c : v) c /= g;
    return v;
}

inline Integer zv_sym(const Integer& x, const Integer& m) {
    Integer r = x % m;
    if (sgn(r) < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

inline PolyQ zvec_to_polyq(const ZVec& v) {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (const auto& z : v) c.emplace_back(z);
    return PolyQ::from_coeffs(std::move(c));
}

inline ZVec polyq_to_primitive_zvec(const PolyQ& f) {
    Integer den(1);
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZVec v;
    for (const auto& c : f.coeffs()) {
        Rational scaled = c * Rational(den);
        v.emplace_back(scaled.get_num());
    }
    return zv_primitive(std::move(v));
}

// Irreducible factors over Z of a primitive square-free polynomial.
inline std::vector<ZVec> zassenhaus_squarefree(ZVec f) {
    std::vector<ZVec> out;
    zv_trim(f);
    if (zv_deg(f) <= 1) {
        if (zv_deg(f) >= 1) out.push_back(std::move(f));
        return out;
    }
    auto next_prime = [](long n) {
        for (long c = n + 2;; c += 2) {
            bool prime = true;
            for (long d = 3; d * d <= c; d += 2) {
                if (c % d == 0) {
                    prime = false;
                    break;
                }
            }
            if (prime) return c;
        }
    };
    long p = 0;
    PolyFp fp;
    for (long candidate = 3; candidate < 100000; candidate = next_prime(candidate)) {
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), candidate)) continue;
        PolyFp trial = fp_poly(f, candidate);
        if (trial.degree() != zv_deg(f)) continue;
        PolyFp d = trial.derivative();
        if (d.is_zero_poly()) continue;
        if (gcd(trial, d).degree() != 0) continue;
        p = candidate;
        fp = trial;
        break;
    }
    if (p == 0) throw DomainError("no usable prime for factorization");

    std::vector<PolyFp> modular = factor_mod_p(fp.monic());
    std::sort(modular.begin(), modular.end(), [](const PolyFp& a, const PolyFp& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i)
            if (a.coeff(i).v != b.coeff(i).v) return a.coeff(i).v < b.coeff(i).v;
        return false;
    });
    if (modular.size() == 1) {
        out.push_back(std::move(f));
        return out;
    }
    if (modular.size() > 24) throw DomainError("factor recombination overflow");

    // Coefficient bound for any factor of f (times lc), then lift past it.
    Integer norm2(0);
    for (const auto& c : f) norm2 += c * c;
    Integer bound = integer_sqrt_exact(norm2).value_or(Integer(0)) + 1;
    Integer lc_abs = abs(f.back());
    bound = (Integer(1) << (zv_deg(f) + 1)) * bound * lc_abs;
    Integer target(p);
    while (target <= 2 * bound) target *= p;
    // hensel_tree squares the modulus; run the schedule to a fixed point.
    Integer reach(p);
    while (reach < target) reach = reach * reach;
    target = reach;

    std::vector<ZVec> lifted;
    hensel_tree(zv_mod(f, target), modular, 0, modular.size(), p, target, lifted);

    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    ZVec current = f;

    auto try_subsets = [&](std::size_t size, auto&& self, std::vector<std::size_t>& chosen,
                           std::size_t start) -> bool {
        if (chosen.size() == size) {
            ZVec cand{current.back()};
            for (std::size_t idx : chosen) cand = zv_mul(cand, lifted[remaining[idx]], target);
            for (auto& c : cand) c = zv_sym(c, target);
            zv_trim(cand);
            ZVec g = zv_primitive(cand);
            if (g.empty()) return false;
            PolyQ gq = zvec_to_polyq(g);
            auto quot = exact_div(zvec_to_polyq(current), gq);
            if (!quot) return false;
            out.push_back(g);
            current = polyq_to_primitive_zvec(*quot);
            std::vector<std::size_t> next;
            for (std::size_t i = 0; i < remaining.size(); ++i)
                if (std::find(chosen.begin(), chosen.end(), i) == chosen.end())
                    next.push_back(remaining[i]);
            remaining = std::move(next);
            return true;
        }
        for (std::size_t i = start; i < remaining.size(); ++i) {
            chosen.push_back(i);
            if (self(size, self, chosen, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    for (std::size_t size = 1; 2 * size <= remaining.size();) {
        std::vector<std::size_t> chosen;
        if (!try_subsets(size, try_subsets, chosen, 0)) ++size;
    }
    if (zv_deg(current) >= 1) out.push_back(std::move(current));
    return out;
}

}  // namespace detail

// Complete factorization over Q into monic irreducibles with multiplicities.
inline Factorization<PolyQ> factor(const PolyQ& f) {
    if (f.is_zero_poly() || f.is_constant())
        throw DomainError("factor needs a nonzero, non-constant polynomial");
    Factorization<PolyQ> result;
    result.unit = f.leading();
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        detail::ZVec z = detail::polyq_to_primitive_zvec(part);
        for (auto& irred : detail::zassenhaus_squarefree(std::move(z)))
            result.factors.emplace_back(detail::zvec_to_polyq(irred).monic(), mult);
    }
    PolyQ check(result.unit);
    for (const auto& [g, m] : result.factors) check = check * g.pow_u(static_cast<unsigned>(m));
    if (!(check == f)) throw DomainError("factorization self-check failed");
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
                  for (int i = a.first.degree(); i >= 0; --i) {
                      if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
                  }
                  return false;
              });
    return result;
}

namespace detail {

inline PolyQi conj_poly(const PolyQi& f) {
    return f.map([](const GaussianRational& c) { return conj(c); });
}

inline PolyQ real_part_poly(const PolyQi& f) {
    std::vector<Rational> c;
    for (const auto& g : f.coeffs()) {
        if (!is_zero(g.im)) throw DomainError("expected a real polynomial");
        c.push_back(g.re);
    }
    return PolyQ::from_coeffs(std::move(c));
}

inline PolyQi to_gaussian_poly(const PolyQ& f) {
    return f.map([](const Rational& c) { return GaussianRational{c}; });
}

// Trager's method: factor a square-free monic g over Q(i) through the norm
// N(g(t - s*i)) for a shift s making the norm square-free.
inline std::vector<PolyQi> trager_squarefree(const PolyQi& g) {
    if (g.degree() == 1) return {g.monic()};
    static const long kShifts[] = {0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5};
    for (long s : kShifts) {
        GaussianRational shift{Rational(0), Rational(-s)};
        PolyQi gs = g.compose_shift(shift);
        PolyQi norm_qi = gs * conj_poly(gs);
        PolyQ norm = real_part_poly(norm_qi);
        if (gcd(norm, norm.derivative()).degree() != 0) continue;
        auto norm_factors = factor(norm);
        std::vector<PolyQi> out;
        GaussianRational back_shift{Rational(0), Rational(s)};
        for (const auto& [h, mult] : norm_factors.factors) {
            PolyQi w = gcd(gs, to_gaussian_poly(h));
            if (w.degree() >= 1) out.push_back(w.compose_shift(back_shift).monic());
        }
        // The norm's irreducible factors biject onto g's; verify the product.
        PolyQi check(GaussianRational{Rational(1)});
        for (const auto& w : out) check = check * w;
        if (check == g.monic()) return out;
    }
    throw DomainError("no usable shift for factorization over Q(i)");
}

}  // namespace detail

inline Factorization<PolyQi> factor(const PolyQi& f) {
    if (f.is_zero_poly() || f.is_constant())
        throw DomainError("factor needs a nonzero, non-constant polynomial");
    Factorization<PolyQi> result;
    result.unit = f.leading();
    for (const auto& [part, mult] : squarefree_decomposition(f))
        for (auto& irred : detail::trager_squarefree(part))
            result.factors.emplace_back(std::move(irred), mult);
    auto key = [](const PolyQi& p, const PolyQi& q) {
        if (p.degree() != q.degree()) return p.degree() < q.degree();
        for (int i = p.degree(); i >= 0; --i) {
            const auto a = p.coeff(i), b = q.coeff(i);
            if (a.re != b.re) return a.re < b.re;
            if (a.im != b.im) return a.im < b.im;
        }
        return false;
    };
    std::sort(result.factors.begin(), result.factors.end(),
              [&](const auto& a, const auto& b) { return key(a.first, b.first); });
    return result;
}

// ---------------------------------------------------------------------------
// Real-nonvanishing tests.
// ---------------------------------------------------------------------------

inline bool nonvanishing_on_reals(const PolyQ& f) {
    if (f.is_zero_poly()) throw DomainError("nonvanishing test on the zero polynomial");
    if (f.is_constant()) return true;
    return count_real_roots(f) == 0;
}

// Real roots of f over Q(i) are exactly the real roots of gcd(f, conj(f)),
// which has rational coefficients.
inline bool nonvanishing_on_reals(const PolyQi& f) {
    if (f.is_zero_poly()) throw DomainError("nonvanishing test on the zero polynomial");
    if (f.is_constant()) return true;
    PolyQi g = gcd(f, detail::conj_poly(f));
    if (g.degree() == 0) return true;
    return count_real_roots(detail::real_part_poly(g)) == 0;
}

}  // namespace abel
