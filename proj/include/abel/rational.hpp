#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "abel/errors.hpp"

namespace abel {

// Exact arithmetic scalars. Rationals are GMP-backed and always canonical:
// reduced, positive denominator. No operation in this layer ever rounds.
using Integer = mpz_class;
using Rational = mpq_class;

// Unit element per scalar type; extension scalars specialize this alongside
// their definitions. Only instantiated for scalars that are constructible
// without runtime parameters.
template <class S>
struct ScalarOne;
template <>
struct ScalarOne<mpq_class> {
    static mpq_class get() { return mpq_class(1); }
};
template <class S>
S scalar_one() {
    return ScalarOne<S>::get();
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_one(const Rational& x) { return x == 1; }
inline Rational mul_int(const Rational& x, long n) { return x * n; }
inline Rational div_int(const Rational& x, long n) { return x / n; }
inline Rational conj(const Rational& x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

inline Rational rational_of(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string str(const Rational& x) { return x.get_str(); }

// Accepts "n" or "n/d"; throws ParseError on anything else.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw ParseError("invalid rational literal '" + text + "'");
    if (sgn(r.get_den()) == 0) throw ParseError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::optional<Integer> integer_sqrt_exact(const Integer& n) {
    if (sgn(n) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline std::optional<Rational> rational_sqrt_exact(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    auto n = integer_sqrt_exact(x.get_num());
    if (!n) return std::nullopt;
    auto d = integer_sqrt_exact(x.get_den());
    if (!d) return std::nullopt;
    Rational r(*n, *d);
    r.canonicalize();
    return r;
}

// n = s^2 * d with d square-free, n > 0. Trial division up to a fixed bound,
// then a primality/perfect-square check on the cofactor. Discriminants at the
// scales this library targets stay well inside the bound; anything bigger is
// reported rather than silently mis-decomposed.
inline std::pair<Integer, Integer> squarefree_decompose(Integer n) {
    if (sgn(n) <= 0) throw DomainError("squarefree_decompose expects a positive integer");
    Integer s = 1, d = 1;
    const unsigned long kTrialBound = 1000000;
    for (unsigned long p = 2; Integer(p) * p <= n && p <= kTrialBound; p = (p == 2 ? 3 : p + 2)) {
        if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) d *= p;
    }
    if (n > 1) {
        if (auto r = integer_sqrt_exact(n)) {
            s *= *r;
        } else if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
            d *= n;
        } else {
            throw DomainError("square-free decomposition overflow: cofactor " + n.get_str() +
                              " resists factoring");
        }
    }
    return {s, d};
}

// x >= 0 as s * sqrt(d) with s rational, d square-free positive integer.
inline std::pair<Rational, Integer> rational_sqrt_surd(const Rational& x) {
    if (sgn(x) < 0) throw DomainError("rational_sqrt_surd expects a nonnegative rational");
    if (sgn(x) == 0) return {Rational(0), Integer(1)};
    Integer nd = x.get_num() * x.get_den();
    auto [s, d] = squarefree_decompose(nd);
    Rational scale(s, x.get_den());
    scale.canonicalize();
    return {scale, d};
}

}  // namespace abel
