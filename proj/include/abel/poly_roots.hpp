#pragma once

#include <vector>

#include "abel/polynomial.hpp"
#include "abel/rational.hpp"

namespace abel {

using PolyQ = Polynomial<Rational>;

// Sturm chain of f: p0 = f, p1 = f', p_{i+1} = -rem(p_{i-1}, p_i).
inline std::vector<PolyQ> sturm_chain(const PolyQ& f) {
    std::vector<PolyQ> chain;
    chain.push_back(f);
    PolyQ d = f.derivative();
    if (!d.is_zero_poly()) chain.push_back(d);
    while (chain.size() >= 2 && !chain.back().is_zero_poly()) {
        auto [q, r] = divrem(chain[chain.size() - 2], chain.back());
        if (r.is_zero_poly()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace detail {

inline int sign_at(const PolyQ& p, const Rational& x) { return sgn(p.eval(x)); }

// Sign at +inf / -inf from the leading coefficient and degree parity.
inline int sign_at_inf(const PolyQ& p, bool positive_end) {
    if (p.is_zero_poly()) return 0;
    int s = sgn(p.leading());
    if (!positive_end && p.degree() % 2 != 0) s = -s;
    return s;
}

template <class SignFn>
int sign_variations(const std::vector<PolyQ>& chain, SignFn&& sign_of) {
    int variations = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(p);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

}  // namespace detail

// Number of distinct real roots in (lo, hi]; lo/hi must not be roots of f
// when used for isolation refinement.
inline int count_real_roots_between(const std::vector<PolyQ>& chain, const Rational& lo,
                                    const Rational& hi) {
    int vlo = detail::sign_variations(chain, [&](const PolyQ& p) { return detail::sign_at(p, lo); });
    int vhi = detail::sign_variations(chain, [&](const PolyQ& p) { return detail::sign_at(p, hi); });
    return vlo - vhi;
}

inline int count_real_roots(const PolyQ& f) {
    if (f.is_zero_poly()) throw DomainError("root count of the zero polynomial");
    if (f.is_constant()) return 0;
    PolyQ squarefree = *exact_div(f, gcd(f, f.derivative()));
    auto chain = sturm_chain(squarefree);
    int vneg =
        detail::sign_variations(chain, [](const PolyQ& p) { return detail::sign_at_inf(p, false); });
    int vpos =
        detail::sign_variations(chain, [](const PolyQ& p) { return detail::sign_at_inf(p, true); });
    return vneg - vpos;
}

inline bool has_real_root(const PolyQ& f) { return count_real_roots(f) > 0; }

// Cauchy bound: all real roots lie in (-M, M).
inline Rational root_bound(const PolyQ& f) {
    Rational m(0);
    for (int i = 0; i < f.degree(); ++i) {
        Rational a = abs(f.coeff(i) / f.leading());
        if (a > m) m = a;
    }
    return m + 1;
}

struct RootInterval {
    Rational lo, hi;  // half-open (lo, hi], contains exactly one root
};

// Isolating intervals for the distinct real roots of f, by Sturm bisection.
inline std::vector<RootInterval> isolate_real_roots(const PolyQ& f) {
    if (f.is_zero_poly()) throw DomainError("root isolation of the zero polynomial");
    if (f.is_constant()) return {};
    PolyQ g = *exact_div(f, gcd(f, f.derivative()));
    auto chain = sturm_chain(g);
    Rational bound = root_bound(g);
    std::vector<RootInterval> out;
    std::vector<RootInterval> todo{{-bound, bound}};
    while (!todo.empty()) {
        auto [lo, hi] = todo.back();
        todo.pop_back();
        int n = count_real_roots_between(chain, lo, hi);
        if (n == 0) continue;
        if (n == 1) {
            out.push_back({lo, hi});
            continue;
        }
        Rational mid = (lo + hi) / 2;
        // Nudge off a root so the interval endpoints stay regular.
        while (is_zero(g.eval(mid))) mid = (lo + mid) / 2;
        todo.push_back({lo, mid});
        todo.push_back({mid, hi});
    }
    return out;
}

}  // namespace abel
