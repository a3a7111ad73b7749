#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "abel/gaussian.hpp"
#include "abel/polynomial.hpp"
#include "abel/rational.hpp"

namespace abel {

// Real trigonometric polynomial a0 + sum a_n cos(nt) + b_n sin(nt) over an
// exact scalar field S. The degree is the highest active harmonic; the zero
// element has degree kDegNegInf. Harmonic storage is trimmed, so h.size() is
// the degree of a non-constant element.
template <class S>
class TrigPoly {
  public:
    TrigPoly() = default;
    explicit TrigPoly(S constant) : a0_(std::move(constant)) {}

    static TrigPoly constant(S c) { return TrigPoly(std::move(c)); }
    static TrigPoly cos_term(int n, S coeff) {
        TrigPoly p;
        if (n == 0) {
            p.a0_ = std::move(coeff);
            return p;
        }
        p.h_.resize(static_cast<std::size_t>(n));
        p.h_[static_cast<std::size_t>(n) - 1].first = std::move(coeff);
        p.trim();
        return p;
    }
    static TrigPoly sin_term(int n, S coeff) {
        TrigPoly p;
        if (n == 0) return p;
        p.h_.resize(static_cast<std::size_t>(n));
        p.h_[static_cast<std::size_t>(n) - 1].second = std::move(coeff);
        p.trim();
        return p;
    }
    static TrigPoly from_parts(S a0, std::vector<std::pair<S, S>> harmonics) {
        TrigPoly p;
        p.a0_ = std::move(a0);
        p.h_ = std::move(harmonics);
        p.trim();
        return p;
    }

    int degree() const {
        if (!h_.empty()) return static_cast<int>(h_.size());
        return is_zero(a0_) ? kDegNegInf : 0;
    }
    bool is_zero_elem() const { return is_zero(a0_) && h_.empty(); }
    bool is_constant() const { return h_.empty(); }

    const S& constant_term() const { return a0_; }
    // (a_n, b_n); zero beyond the degree.
    std::pair<S, S> harmonic(int n) const {
        if (n <= 0 || n > static_cast<int>(h_.size())) return {S{}, S{}};
        return h_[static_cast<std::size_t>(n) - 1];
    }
    const std::vector<std::pair<S, S>>& harmonics() const { return h_; }

    friend TrigPoly operator+(const TrigPoly& x, const TrigPoly& y) {
        TrigPoly r;
        r.a0_ = x.a0_ + y.a0_;
        r.h_.resize(std::max(x.h_.size(), y.h_.size()));
        for (std::size_t i = 0; i < r.h_.size(); ++i) {
            auto [xa, xb] = i < x.h_.size() ? x.h_[i] : std::pair<S, S>{};
            auto [ya, yb] = i < y.h_.size() ? y.h_[i] : std::pair<S, S>{};
            r.h_[i] = {xa + ya, xb + yb};
        }
        r.trim();
        return r;
    }
    friend TrigPoly operator-(const TrigPoly& x, const TrigPoly& y) { return x + (-y); }
    friend TrigPoly operator-(const TrigPoly& x) {
        TrigPoly r = x;
        r.a0_ = -r.a0_;
        for (auto& [a, b] : r.h_) {
            a = -a;
            b = -b;
        }
        return r;
    }
    friend TrigPoly operator*(const TrigPoly& x, const S& s) {
        TrigPoly r = x;
        r.a0_ = r.a0_ * s;
        for (auto& [a, b] : r.h_) {
            a = a * s;
            b = b * s;
        }
        r.trim();
        return r;
    }
    friend TrigPoly operator*(const S& s, const TrigPoly& x) { return x * s; }

    // Product via the product-to-sum identities; exact, degree-additive.
    friend TrigPoly operator*(const TrigPoly& x, const TrigPoly& y) {
        if (x.is_zero_elem() || y.is_zero_elem()) return {};
        int dx = x.h_.size(), dy = y.h_.size();
        TrigPoly r;
        r.h_.resize(static_cast<std::size_t>(dx + dy));
        auto add_cos = [&](int n, const S& v) {
            if (n < 0) n = -n;  // cos(-k) = cos(k)
            if (n == 0)
                r.a0_ = r.a0_ + v;
            else
                r.h_[static_cast<std::size_t>(n) - 1].first =
                    r.h_[static_cast<std::size_t>(n) - 1].first + v;
        };
        auto add_sin = [&](int n, const S& v) {
            if (n == 0) return;
            if (n < 0) {  // sin(-k) = -sin(k)
                r.h_[static_cast<std::size_t>(-n) - 1].second =
                    r.h_[static_cast<std::size_t>(-n) - 1].second - v;
            } else {
                r.h_[static_cast<std::size_t>(n) - 1].second =
                    r.h_[static_cast<std::size_t>(n) - 1].second + v;
            }
        };
        for (int m = 0; m <= dx; ++m) {
            auto [am, bm] = m == 0 ? std::pair<S, S>{x.a0_, S{}} : x.h_[m - 1];
            if (is_zero(am) && is_zero(bm)) continue;
            for (int n = 0; n <= dy; ++n) {
                auto [cn, dn] = n == 0 ? std::pair<S, S>{y.a0_, S{}} : y.h_[n - 1];
                if (is_zero(cn) && is_zero(dn)) continue;
                if (m == 0 && n == 0) {
                    r.a0_ = r.a0_ + am * cn;
                    continue;
                }
                // cos m cos n = (cos(m-n) + cos(m+n)) / 2
                if (!is_zero(am) && !is_zero(cn)) {
                    S v = div_int(am * cn, 2);
                    add_cos(m - n, v);
                    add_cos(m + n, v);
                }
                // sin m sin n = (cos(m-n) - cos(m+n)) / 2
                if (!is_zero(bm) && !is_zero(dn)) {
                    S v = div_int(bm * dn, 2);
                    add_cos(m - n, v);
                    add_cos(m + n, -v);
                }
                // sin m cos n = (sin(m+n) + sin(m-n)) / 2
                if (!is_zero(bm) && !is_zero(cn)) {
                    S v = div_int(bm * cn, 2);
                    add_sin(m + n, v);
                    add_sin(m - n, v);
                }
                // cos m sin n = (sin(m+n) - sin(m-n)) / 2
                if (!is_zero(am) && !is_zero(dn)) {
                    S v = div_int(am * dn, 2);
                    add_sin(m + n, v);
                    add_sin(m - n, -v);
                }
            }
        }
        r.trim();
        return r;
    }

    friend bool operator==(const TrigPoly& x, const TrigPoly& y) {
        return x.a0_ == y.a0_ && x.h_ == y.h_;
    }

    // Termwise: a_n cos(nt) -> -n a_n sin(nt), b_n sin(nt) -> n b_n cos(nt).
    TrigPoly derivative() const {
        TrigPoly r;
        r.h_.resize(h_.size());
        for (std::size_t i = 0; i < h_.size(); ++i) {
            long n = static_cast<long>(i) + 1;
            r.h_[i] = {mul_int(h_[i].second, n), mul_int(-h_[i].first, n)};
        }
        r.trim();
        return r;
    }

    TrigPoly pow_u(unsigned e) const {
        TrigPoly result(scalar_one<S>());
        TrigPoly base = *this;
        while (e) {
            if (e & 1u) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    double eval(double t) const {
        double acc = to_double_scalar(a0_);
        for (std::size_t i = 0; i < h_.size(); ++i) {
            double n = static_cast<double>(i + 1);
            acc += to_double_scalar(h_[i].first) * std::cos(n * t) +
                   to_double_scalar(h_[i].second) * std::sin(n * t);
        }
        return acc;
    }

    // Value at t = pi: a0 + sum (-1)^n a_n, exact.
    S eval_at_pi() const {
        S acc = a0_;
        for (std::size_t i = 0; i < h_.size(); ++i) {
            if ((i + 1) % 2 == 0)
                acc = acc + h_[i].first;
            else
                acc = acc - h_[i].first;
        }
        return acc;
    }
    S eval_at_zero() const {
        S acc = a0_;
        for (const auto& [a, b] : h_) acc = acc + a;
        return acc;
    }

    template <class F>
    auto map(F&& f) const -> TrigPoly<std::decay_t<decltype(f(std::declval<S>()))>> {
        using T = std::decay_t<decltype(f(std::declval<S>()))>;
        std::vector<std::pair<T, T>> h;
        h.reserve(h_.size());
        for (const auto& [a, b] : h_) h.emplace_back(f(a), f(b));
        return TrigPoly<T>::from_parts(f(a0_), std::move(h));
    }

  private:
    static double to_double_scalar(const S& v) { return to_double(v); }

    void trim() {
        while (!h_.empty() && is_zero(h_.back().first) && is_zero(h_.back().second)) h_.pop_back();
    }

    S a0_{};
    std::vector<std::pair<S, S>> h_;
};

using TrigQ = TrigPoly<Rational>;

// ---------------------------------------------------------------------------
// Laurent model: p(t) = z^{-N} P(z) with z = e^{it} and P of degree 2N over
// the complexification of S. Realness of p is the Hermitian symmetry
// coeff(z^{N+k}) = conj(coeff(z^{N-k})).
// ---------------------------------------------------------------------------

template <class S>
struct LaurentModel {
    Polynomial<Gaussian<S>> poly;  // degree 2N, nonzero constant term
    int offset = 0;                // N

    bool hermitian() const {
        for (int k = 0; k <= offset; ++k) {
            Gaussian<S> hi = poly.coeff(offset + k);
            Gaussian<S> lo = poly.coeff(offset - k);
            if (!(hi == conj(lo))) return false;
        }
        return true;
    }
};

template <class S>
LaurentModel<S> to_laurent(const TrigPoly<S>& p) {
    if (p.is_zero_elem()) return {};
    int n = p.degree() < 0 ? 0 : p.degree();
    std::vector<Gaussian<S>> c(static_cast<std::size_t>(2 * n) + 1, Gaussian<S>{});
    c[static_cast<std::size_t>(n)] = Gaussian<S>{p.constant_term()};
    for (int k = 1; k <= n; ++k) {
        auto [a, b] = p.harmonic(k);
        // cos kt = (z^k + z^-k)/2, sin kt = -i (z^k - z^-k)/2
        c[static_cast<std::size_t>(n + k)] = Gaussian<S>{div_int(a, 2), div_int(-b, 2)};
        c[static_cast<std::size_t>(n - k)] = Gaussian<S>{div_int(a, 2), div_int(b, 2)};
    }
    return {Polynomial<Gaussian<S>>::from_coeffs(std::move(c)), n};
}

template <class S>
TrigPoly<S> from_laurent(const LaurentModel<S>& m) {
    if (m.poly.is_zero_poly()) return {};
    if (!m.hermitian()) throw DomainError("Laurent model is not Hermitian-symmetric");
    S a0 = m.poly.coeff(m.offset).re;
    std::vector<std::pair<S, S>> h;
    for (int k = 1; k <= m.offset; ++k) {
        Gaussian<S> hi = m.poly.coeff(m.offset + k);
        h.emplace_back(mul_int(hi.re, 2), mul_int(-hi.im, 2));
    }
    return TrigPoly<S>::from_parts(std::move(a0), std::move(h));
}

// Exact division in the trig ring. b = a*q iff the Laurent polynomial of a
// divides that of b; the quotient inherits the Hermitian symmetry.
template <class S>
std::optional<TrigPoly<S>> trig_exact_div(const TrigPoly<S>& b, const TrigPoly<S>& a) {
    if (a.is_zero_elem()) throw DomainError("trig division by zero");
    if (b.is_zero_elem()) return TrigPoly<S>{};
    if (a.degree() > b.degree()) return std::nullopt;
    auto la = to_laurent(a);
    auto lb = to_laurent(b);
    auto q = exact_div(lb.poly, la.poly);
    if (!q) return std::nullopt;
    LaurentModel<S> lq{*q, lb.offset - la.offset};
    if (lq.poly.degree() != 2 * lq.offset || !lq.hermitian()) return std::nullopt;
    return from_laurent(lq);
}

// Divisibility with quotient: (a, b) -> b = a*q ?
template <class S>
std::pair<bool, std::optional<TrigPoly<S>>> trig_divides(const TrigPoly<S>& a,
                                                         const TrigPoly<S>& b) {
    auto q = trig_exact_div(b, a);
    if (!q) return {false, std::nullopt};
    return {true, std::move(q)};
}

// Scale so the highest harmonic pair (a_N, b_N) has first nonzero entry 1;
// constants normalize to 1. Returns the unit factored out: p = unit * canon.
template <class S>
std::pair<TrigPoly<S>, S> trig_canonical(const TrigPoly<S>& p) {
    if (p.is_zero_elem()) throw DomainError("cannot normalize the zero trig polynomial");
    S unit;
    if (p.is_constant()) {
        unit = p.constant_term();
    } else {
        auto [a, b] = p.harmonic(p.degree());
        unit = is_zero(a) ? b : a;
    }
    S inv = scalar_one<S>() / unit;
    return {p * inv, unit};
}

}  // namespace abel
