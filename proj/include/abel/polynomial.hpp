#pragma once

#include <initializer_list>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "abel/errors.hpp"
#include "abel/rational.hpp"

namespace abel {

// Degree of the zero polynomial. Smaller than every integer degree, so the
// usual comparisons work unchanged; never feed it into degree arithmetic.
inline constexpr int kDegNegInf = std::numeric_limits<int>::min();

// Dense univariate polynomial over an exact scalar field S. Coefficients are
// stored by ascending degree and trimmed, so the invariant is: empty storage
// means the zero polynomial, otherwise the back coefficient is nonzero.
template <class S>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(S constant) {
        if (!is_zero(constant)) c_.push_back(std::move(constant));
    }
    Polynomial(std::initializer_list<S> ascending) : c_(ascending) { trim(); }

    static Polynomial from_coeffs(std::vector<S> ascending) {
        Polynomial p;
        p.c_ = std::move(ascending);
        p.trim();
        return p;
    }
    static Polynomial monomial(S coeff, int deg) {
        Polynomial p;
        if (!is_zero(coeff)) {
            p.c_.assign(static_cast<std::size_t>(deg) + 1, S{});
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    int degree() const { return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const S& leading() const {
        if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }
    // Coefficient of t^i, zero beyond the degree.
    S coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return S{};
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<S>& coeffs() const { return c_; }

    friend Polynomial operator+(const Polynomial& x, const Polynomial& y) {
        std::vector<S> r(std::max(x.c_.size(), y.c_.size()), S{});
        for (std::size_t i = 0; i < x.c_.size(); ++i) r[i] = r[i] + x.c_[i];
        for (std::size_t i = 0; i < y.c_.size(); ++i) r[i] = r[i] + y.c_[i];
        return from_coeffs(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& x, const Polynomial& y) {
        std::vector<S> r(std::max(x.c_.size(), y.c_.size()), S{});
        for (std::size_t i = 0; i < x.c_.size(); ++i) r[i] = r[i] + x.c_[i];
        for (std::size_t i = 0; i < y.c_.size(); ++i) r[i] = r[i] - y.c_[i];
        return from_coeffs(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& x) {
        std::vector<S> r = x.c_;
        for (auto& v : r) v = -v;
        return from_coeffs(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& x, const Polynomial& y) {
        if (x.c_.empty() || y.c_.empty()) return {};
        std::vector<S> r(x.c_.size() + y.c_.size() - 1, S{});
        for (std::size_t i = 0; i < x.c_.size(); ++i)
            for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] = r[i + j] + x.c_[i] * y.c_[j];
        return from_coeffs(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& x, const S& s) {
        std::vector<S> r = x.c_;
        for (auto& v : r) v = v * s;
        return from_coeffs(std::move(r));
    }
    friend Polynomial operator*(const S& s, const Polynomial& x) { return x * s; }
    friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.c_ == y.c_; }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<S> r(c_.size() - 1, S{});
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mul_int(c_[i], static_cast<long>(i));
        return from_coeffs(std::move(r));
    }

    S eval(const S& x) const {
        S acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial pow_u(unsigned e) const {
        Polynomial result(scalar_one<S>());
        Polynomial base = *this;
        while (e) {
            if (e & 1u) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    // f(t + shift), by Horner over the shifted variable.
    Polynomial compose_shift(const S& shift) const {
        Polynomial lin = from_coeffs({shift, scalar_one<S>()});
        Polynomial acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + Polynomial(c_[i]);
        return acc;
    }

    Polynomial monic() const {
        if (c_.empty()) throw DomainError("cannot normalize the zero polynomial");
        Polynomial r = *this;
        const S lc = c_.back();
        for (auto& v : r.c_) v = v / lc;
        return r;
    }

    template <class F>
    auto map(F&& f) const -> Polynomial<std::decay_t<decltype(f(std::declval<S>()))>> {
        using T = std::decay_t<decltype(f(std::declval<S>()))>;
        std::vector<T> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(f(v));
        return Polynomial<T>::from_coeffs(std::move(r));
    }

  private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<S> c_;
};

template <class S>
std::pair<Polynomial<S>, Polynomial<S>> divrem(const Polynomial<S>& a, const Polynomial<S>& b) {
    if (b.is_zero_poly()) throw DomainError("division by the zero polynomial");
    if (a.degree() < b.degree()) return {Polynomial<S>{}, a};
    std::vector<S> rem(a.coeffs());
    std::vector<S> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, S{});
    const S lead = b.leading();
    for (int i = a.degree(); i >= b.degree(); --i) {
        S c = rem[static_cast<std::size_t>(i)];
        if (is_zero(c)) continue;
        S q = c / lead;
        quo[static_cast<std::size_t>(i - b.degree())] = q;
        for (int j = 0; j <= b.degree(); ++j) {
            auto k = static_cast<std::size_t>(i - b.degree() + j);
            rem[k] = rem[k] - q * b.coeff(j);
        }
    }
    return {Polynomial<S>::from_coeffs(std::move(quo)), Polynomial<S>::from_coeffs(std::move(rem))};
}

template <class S>
std::optional<Polynomial<S>> exact_div(const Polynomial<S>& a, const Polynomial<S>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero_poly()) return std::nullopt;
    return q;
}

// Monic gcd by Euclid's algorithm; S must be a field.
template <class S>
Polynomial<S> gcd(const Polynomial<S>& a, const Polynomial<S>& b) {
    if (a.is_zero_poly() && b.is_zero_poly())
        throw DomainError("gcd of two zero polynomials is undefined");
    Polynomial<S> x = a, y = b;
    while (!y.is_zero_poly()) {
        auto [q, r] = divrem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

}  // namespace abel
