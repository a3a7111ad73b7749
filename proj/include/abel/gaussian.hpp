#pragma once

#include <complex>
#include <optional>
#include <string>

#include "abel/rational.hpp"

namespace abel {

// S + S*i for an exact base scalar S. Gaussian<Rational> is the field Q(i).
template <class S>
struct Gaussian {
    S re{};
    S im{};

    Gaussian() = default;
    Gaussian(S r) : re(std::move(r)) {}
    Gaussian(S r, S i) : re(std::move(r)), im(std::move(i)) {}

    friend Gaussian operator+(const Gaussian& x, const Gaussian& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend Gaussian operator-(const Gaussian& x, const Gaussian& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend Gaussian operator-(const Gaussian& x) { return {-x.re, -x.im}; }
    friend Gaussian operator*(const Gaussian& x, const Gaussian& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend Gaussian operator/(const Gaussian& x, const Gaussian& y) {
        S n = y.re * y.re + y.im * y.im;
        if (is_zero(n)) throw DomainError("division by zero gaussian scalar");
        return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
    }
    friend bool operator==(const Gaussian& x, const Gaussian& y) {
        return x.re == y.re && x.im == y.im;
    }
};

template <class S>
struct ScalarOne<Gaussian<S>> {
    static Gaussian<S> get() { return {scalar_one<S>(), S{}}; }
};

template <class S>
bool is_zero(const Gaussian<S>& x) {
    return is_zero(x.re) && is_zero(x.im);
}
template <class S>
bool is_one(const Gaussian<S>& x) {
    return is_one(x.re) && is_zero(x.im);
}
template <class S>
Gaussian<S> mul_int(const Gaussian<S>& x, long n) {
    return {mul_int(x.re, n), mul_int(x.im, n)};
}
template <class S>
Gaussian<S> div_int(const Gaussian<S>& x, long n) {
    return {div_int(x.re, n), div_int(x.im, n)};
}
template <class S>
Gaussian<S> conj(const Gaussian<S>& x) {
    return {x.re, -x.im};
}
template <class S>
bool is_real(const Gaussian<S>& x) {
    return is_zero(x.im);
}
template <class S>
std::complex<double> to_complex(const Gaussian<S>& x) {
    return {to_double(x.re), to_double(x.im)};
}

using GaussianRational = Gaussian<Rational>;

inline std::string str(const GaussianRational& x) {
    if (is_zero(x.im)) return str(x.re);
    std::string im = is_one(x.im) ? "i" : (x.im == -1 ? "-i" : str(x.im) + "*i");
    if (is_zero(x.re)) return im;
    return str(x.re) + (sgn(x.im) < 0 ? "" : "+") + im;
}

// Exact square root in Q(i) when one exists. (x+yi)^2 = a+bi needs the norm
// a^2+b^2 to be a rational square n^2 and (a+n)/2 a rational square.
inline std::optional<GaussianRational> gaussian_sqrt_exact(const GaussianRational& z) {
    if (is_zero(z)) return GaussianRational{};
    if (is_zero(z.im)) {
        if (auto r = rational_sqrt_exact(z.re)) return GaussianRational{*r, Rational(0)};
        if (auto r = rational_sqrt_exact(-z.re)) return GaussianRational{Rational(0), *r};
        return std::nullopt;
    }
    auto n = rational_sqrt_exact(z.re * z.re + z.im * z.im);
    if (!n) return std::nullopt;
    auto x = rational_sqrt_exact((z.re + *n) / 2);
    if (!x || is_zero(*x)) return std::nullopt;
    return GaussianRational{*x, z.im / (2 * (*x))};
}

}  // namespace abel
