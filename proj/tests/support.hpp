#pragma once

#include <gtest/gtest.h>

#include "abel/darboux.hpp"
#include "abel/family.hpp"
#include "abel/parse.hpp"

namespace abel::testing {

inline PolyQ P(const std::string& s) { return parse_poly_rational(s); }
inline PolyQi Pi(const std::string& s) { return parse_poly_gaussian(s); }
inline TrigQ T(const std::string& s) { return parse_trig(s); }
inline Rational Q(const std::string& s) { return parse_rational(s); }

inline PolyQ random_poly(Rng& rng, int max_degree, bool nonzero = true) {
    int deg = static_cast<int>(rng.range(0, max_degree));
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(rng.rational(-4, 4));
    auto p = PolyQ::from_coeffs(std::move(c));
    if (nonzero && p.is_zero_poly()) return PolyQ(Rational(1));
    return p;
}

inline PolyQi random_gaussian_poly(Rng& rng, int max_degree, bool nonzero = true) {
    int deg = static_cast<int>(rng.range(0, max_degree));
    std::vector<GaussianRational> c;
    for (int i = 0; i <= deg; ++i)
        c.push_back(GaussianRational{rng.rational(-3, 3), rng.rational(-3, 3)});
    auto p = PolyQi::from_coeffs(std::move(c));
    if (nonzero && p.is_zero_poly()) return PolyQi(GaussianRational{Rational(1)});
    return p;
}

inline TrigQ random_trig(Rng& rng, int max_degree, bool nonzero = true) {
    int deg = static_cast<int>(rng.range(0, max_degree));
    std::vector<std::pair<Rational, Rational>> h;
    for (int n = 1; n <= deg; ++n) h.emplace_back(rng.rational(-3, 3), rng.rational(-3, 3));
    auto p = TrigQ::from_parts(rng.rational(-3, 3), std::move(h));
    if (nonzero && p.is_zero_elem()) return TrigQ::constant(Rational(1));
    return p;
}

// Test-side oracle for the cofactor dependence: solve the full system
// alpha_0 K_x + sum alpha_i K_i == 0 by stacking the x^2, x^1 and x^0
// coefficient blocks without the simplification to sum alpha_i A/p_i = 0.
// Restricted to rational- and gaussian-constant curves.
template <class R>
bool brute_force_dependence(const AbelEquation<R>& eq,
                            const std::vector<InvariantCurve<R>>& curves) {
    using S = typename RingTraits<R>::Scalar;
    using T = RingTraits<R>;
    const std::size_t cols = curves.size() + 1;
    std::vector<typename T::ExtElem> x1_cols;
    x1_cols.push_back(T::to_ext(eq.B));
    for (const auto& c : curves) {
        auto p = c.p_ext();
        x1_cols.push_back(-(p.derivative() + p * T::to_ext(eq.C)));
    }
    int width = T::flat_size(eq.A);
    for (const auto& col : x1_cols) width = std::max(width, T::ext_flat_size(col));
    width = std::max(width, T::flat_size(eq.C));

    RationalMatrix rows;
    auto push_scalar_rows = [&](const std::vector<std::vector<Quad<S>>>& flat_cols) {
        for (int r = 0; r < width; ++r) {
            std::vector<Rational> row(cols, Rational(0));
            std::vector<Rational> row_im(cols, Rational(0));
            bool has_im = false;
            for (std::size_t c = 0; c < cols; ++c) {
                const auto& v = flat_cols[c][static_cast<std::size_t>(r)];
                if (v.d != 0) throw DomainError("oracle restricted to rational constants");
                if constexpr (std::is_same_v<S, Rational>) {
                    row[c] = v.a;
                } else {
                    row[c] = v.a.re;
                    row_im[c] = v.a.im;
                    has_im = true;
                }
            }
            rows.push_back(row);
            if (has_im) rows.push_back(row_im);
        }
    };
    // x^2 block: every column carries A; x^1 block: B and the curve parts;
    // x^0 block: C on the alpha_0 column only.
    std::vector<std::vector<Quad<S>>> block(cols);
    auto a_flat = T::flatten_ext(T::to_ext(eq.A), width);
    for (std::size_t c = 0; c < cols; ++c) block[c] = a_flat;
    push_scalar_rows(block);
    for (std::size_t c = 0; c < cols; ++c) block[c] = T::flatten_ext(x1_cols[c], width);
    push_scalar_rows(block);
    std::vector<Quad<S>> zero_col(static_cast<std::size_t>(width), Quad<S>{});
    for (std::size_t c = 0; c < cols; ++c) block[c] = zero_col;
    block[0] = T::flatten_ext(T::to_ext(eq.C), width);
    push_scalar_rows(block);
    return !rational_nullspace(rows, cols).empty();
}

}  // namespace abel::testing
