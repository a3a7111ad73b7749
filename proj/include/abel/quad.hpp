#pragma once

#include <optional>
#include <string>

#include "abel/gaussian.hpp"
#include "abel/rational.hpp"

namespace abel {

// a + b*sqrt(d) over a base scalar S, with d a fixed square-free integer > 1.
// Values with b == 0 carry d == 0 and combine freely with any extension; two
// values with b != 0 must share d. This is enough to house the solved
// proportionality constants, which live in at most one quadratic extension.
template <class S>
struct Quad {
    S a{};
    S b{};
    long d = 0;

    Quad() = default;
    Quad(S plain) : a(std::move(plain)) {}
    Quad(S a_, S b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
        if (is_zero(b)) d = 0;
    }

    bool rational_part_only() const { return d == 0; }

    static long join(const Quad& x, const Quad& y) {
        if (x.d == 0) return y.d;
        if (y.d == 0 || x.d == y.d) return x.d;
        throw DomainError("mixing distinct quadratic extensions sqrt(" + std::to_string(x.d) +
                          ") and sqrt(" + std::to_string(y.d) + ")");
    }

    friend Quad operator+(const Quad& x, const Quad& y) {
        return {x.a + y.a, x.b + y.b, join(x, y)};
    }
    friend Quad operator-(const Quad& x, const Quad& y) {
        return {x.a - y.a, x.b - y.b, join(x, y)};
    }
    friend Quad operator-(const Quad& x) { return {-x.a, -x.b, x.d}; }
    friend Quad operator*(const Quad& x, const Quad& y) {
        long d = join(x, y);
        S root2 = x.b * y.b;
        return {x.a * y.a + mul_int(root2, d), x.a * y.b + x.b * y.a, d};
    }
    friend Quad operator/(const Quad& x, const Quad& y) {
        long d = join(x, y);
        S n = y.a * y.a - mul_int(y.b * y.b, d);
        if (is_zero(n)) throw DomainError("division by zero quadratic scalar");
        Quad num = x * Quad{y.a, -y.b, y.d};
        return {num.a / n, num.b / n, d};
    }
    friend bool operator==(const Quad& x, const Quad& y) {
        return x.a == y.a && x.b == y.b && x.d == y.d;
    }
};

template <class S>
struct ScalarOne<Quad<S>> {
    static Quad<S> get() { return Quad<S>{scalar_one<S>()}; }
};

template <class S>
bool is_zero(const Quad<S>& x) {
    return is_zero(x.a) && is_zero(x.b);
}
template <class S>
bool is_one(const Quad<S>& x) {
    return is_one(x.a) && is_zero(x.b);
}
template <class S>
Quad<S> mul_int(const Quad<S>& x, long n) {
    return {mul_int(x.a, n), mul_int(x.b, n), x.d};
}
template <class S>
Quad<S> div_int(const Quad<S>& x, long n) {
    return {div_int(x.a, n), div_int(x.b, n), x.d};
}
template <class S>
Quad<S> conj(const Quad<S>& x) {
    return {conj(x.a), conj(x.b), x.d};
}

inline double to_double(const Quad<Rational>& x) {
    if (x.d == 0) return to_double(x.a);
    return to_double(x.a) + to_double(x.b) * std::sqrt(static_cast<double>(x.d));
}
inline std::complex<double> to_complex(const Quad<GaussianRational>& x) {
    if (x.d == 0) return to_complex(x.a);
    return to_complex(x.a) + to_complex(x.b) * std::sqrt(static_cast<double>(x.d));
}
inline std::complex<double> to_complex(const Quad<Rational>& x) {
    return {to_double(x), 0.0};
}

template <class S>
std::string str(const Quad<S>& x) {
    if (x.d == 0) return str(x.a);
    std::string root = "sqrt(" + std::to_string(x.d) + ")";
    std::string surd = is_one(x.b) ? root : "(" + str(x.b) + ")*" + root;
    if (is_zero(x.a)) return surd;
    return "(" + str(x.a) + ")+" + surd;
}

using QuadRational = Quad<Rational>;
using QuadGaussian = Quad<GaussianRational>;

// sqrt of a rational value inside Quad<Rational>: exact if possible, else a
// surd with positive square-free d. Negative radicands have no real root.
inline std::optional<QuadRational> quad_sqrt(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    if (auto r = rational_sqrt_exact(x)) return QuadRational{*r};
    auto [s, d] = rational_sqrt_surd(x);
    if (!d.fits_slong_p()) throw DomainError("surd index too large: sqrt(" + d.get_str() + ")");
    return QuadRational{Rational(0), s, d.get_si()};
}

// sqrt of a Gaussian-rational value within Q(i) or Q(i)(sqrt(d)) for a
// positive square-free integer d. Radicands that would need sqrt of a
// non-real non-square are outside the supported constant field.
inline std::optional<QuadGaussian> quad_sqrt(const GaussianRational& z) {
    if (auto g = gaussian_sqrt_exact(z)) return QuadGaussian{*g};
    if (!is_zero(z.im)) return std::nullopt;
    auto [s, d] = rational_sqrt_surd(sgn(z.re) < 0 ? -z.re : z.re);
    if (!d.fits_slong_p()) throw DomainError("surd index too large: sqrt(" + d.get_str() + ")");
    GaussianRational coeff = sgn(z.re) < 0 ? GaussianRational{Rational(0), s}
                                           : GaussianRational{s, Rational(0)};
    return QuadGaussian{GaussianRational{}, coeff, d.get_si()};
}

}  // namespace abel
