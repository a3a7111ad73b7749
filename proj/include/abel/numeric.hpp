#pragma once

#include <cmath>
#include <complex>
#include <functional>

#include "abel/equation.hpp"

namespace abel {

struct TrajectoryConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    long max_steps = 2000000;
    double blow_up = 1e8;
};

// ---------------------------------------------------------------------------
// Floating-point views of ring elements.
// ---------------------------------------------------------------------------

inline double eval_double(const PolyQ& p, double t) {
    double acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * t + to_double(p.coeff(i));
    return acc;
}
inline double eval_double(const Polynomial<QuadRational>& p, double t) {
    double acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * t + to_double(p.coeff(i));
    return acc;
}
inline std::complex<double> eval_complex(const PolyQi& p, double t) {
    std::complex<double> acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * t + to_complex(p.coeff(i));
    return acc;
}
inline std::complex<double> eval_complex(const Polynomial<QuadGaussian>& p, double t) {
    std::complex<double> acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * t + to_complex(p.coeff(i));
    return acc;
}
inline double eval_double(const TrigQ& p, double t) { return p.eval(t); }
inline double eval_double(const TrigPoly<QuadRational>& p, double t) { return p.eval(t); }

namespace detail {

template <class R>
struct NumericField;
template <>
struct NumericField<PolyQ> {
    using Value = double;
    static Value eval(const PolyQ& p, double t) { return eval_double(p, t); }
    static Value eval_ext(const Polynomial<QuadRational>& p, double t) {
        return eval_double(p, t);
    }
};
template <>
struct NumericField<PolyQi> {
    using Value = std::complex<double>;
    static Value eval(const PolyQi& p, double t) { return eval_complex(p, t); }
    static Value eval_ext(const Polynomial<QuadGaussian>& p, double t) {
        return eval_complex(p, t);
    }
};
template <>
struct NumericField<TrigQ> {
    using Value = double;
    static Value eval(const TrigQ& p, double t) { return eval_double(p, t); }
    static Value eval_ext(const TrigPoly<QuadRational>& p, double t) {
        return eval_double(p, t);
    }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Dormand-Prince 5(4) with adaptive steps.
// ---------------------------------------------------------------------------

namespace detail {

inline double rk45_integrate(const std::function<double(double, double)>& f, double t0, double t1,
                             double x0, const TrajectoryConfig& cfg) {
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b6 = 11.0 / 84,
                        b5 = -2187.0 / 6784;
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    double t = t0, x = x0;
    double h = (t1 - t0) / 100.0;
    double k1 = f(t, x);
    for (long step = 0; step < cfg.max_steps; ++step) {
        if (t >= t1) return x;
        if (std::abs(x) > cfg.blow_up) throw BlowUpError("trajectory blow-up", t);
        if (t + h > t1) h = t1 - t;
        double k2 = f(t + c2 * h, x + h * a21 * k1);
        double k3 = f(t + c3 * h, x + h * (a31 * k1 + a32 * k2));
        double k4 = f(t + c4 * h, x + h * (a41 * k1 + a42 * k2 + a43 * k3));
        double k5 = f(t + c5 * h, x + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        double k6 = f(t + h, x + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        double xnew = x + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        double k7 = f(t + h, xnew);
        double err_raw =
            h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        double scale = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(x), std::abs(xnew));
        double err = std::abs(err_raw) / scale;
        if (!std::isfinite(err)) err = 1e10;  // overflowed stages: reject and shrink
        if (err <= 1.0 || h <= 1e-14 * (t1 - t0)) {
            t += h;
            x = xnew;
            k1 = k7;
        }
        double factor = err > 0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        factor = std::min(5.0, std::max(0.2, factor));
        h *= factor;
        if (!std::isfinite(x)) throw BlowUpError("trajectory blow-up", t);
    }
    throw DomainError("integration step budget exhausted");
}

}  // namespace detail

// Max over samples of |(1/p)' - (A/p^3 + B/p^2 + C/p)| on [lo, hi]; the
// exact identity makes this float noise for true invariant curves.
template <class R, class P>
double residual_sample(const AbelEquation<R>& eq, const P& p, int samples, double lo, double hi) {
    using NF = detail::NumericField<R>;
    if (samples < 1) throw DomainError("need at least one sample");
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
        double t = samples == 1 ? lo : lo + (hi - lo) * i / (samples - 1);
        auto pv = [&] {
            if constexpr (std::is_same_v<P, R>)
                return NF::eval(p, t);
            else
                return NF::eval_ext(p, t);
        }();
        if (std::abs(pv) < 1e-9)
            throw DomainError("curve polynomial vanishes near sample point t=" + std::to_string(t));
        auto dpv = [&] {
            if constexpr (std::is_same_v<P, R>)
                return NF::eval(p.derivative(), t);
            else
                return NF::eval_ext(p.derivative(), t);
        }();
        auto av = NF::eval(eq.A, t);
        auto bv = NF::eval(eq.B, t);
        auto cv = NF::eval(eq.C, t);
        auto residual = -dpv / (pv * pv) - (av / (pv * pv * pv) + bv / (pv * pv) + cv / pv);
        worst = std::max(worst, std::abs(residual));
    }
    return worst;
}

// x(2pi) for the trig equation from x(0) = x0.
inline double poincare_map(const AbelEquation<TrigQ>& eq, double x0,
                           const TrajectoryConfig& cfg = {}) {
    auto f = [&](double t, double x) {
        return eval_double(eq.A, t) * x * x * x + eval_double(eq.B, t) * x * x +
               eval_double(eq.C, t) * x;
    };
    return detail::rk45_integrate(f, 0.0, 2 * std::acos(-1.0), x0, cfg);
}

inline double displacement(const AbelEquation<TrigQ>& eq, double x0,
                           const TrajectoryConfig& cfg = {}) {
    return poincare_map(eq, x0, cfg) - x0;
}

// Inverse period map: integrate backwards from x(2pi) = x1 to recover x(0).
inline double poincare_map_inverse(const AbelEquation<TrigQ>& eq, double x1,
                                   const TrajectoryConfig& cfg = {}) {
    const double period = 2 * std::acos(-1.0);
    auto f = [&](double s, double y) {
        double t = period - s;
        return -(eval_double(eq.A, t) * y * y * y + eval_double(eq.B, t) * y * y +
                 eval_double(eq.C, t) * y);
    };
    return detail::rk45_integrate(f, 0.0, period, x1, cfg);
}

// Characteristic exponent of the rational solution x = 1/p: the period
// integral of 3A x^2 + 2B x + C along it. Trapezoid sums converge spectrally
// on smooth periodic integrands.
template <class P>
double curve_multiplier_exponent(const AbelEquation<TrigQ>& eq, const P& p) {
    const double period = 2 * std::acos(-1.0);
    const int n = 4096;
    double acc = 0;
    for (int i = 0; i < n; ++i) {
        double t = period * i / n;
        double x = 1.0 / eval_double(p, t);
        acc += 3 * eval_double(eq.A, t) * x * x + 2 * eval_double(eq.B, t) * x +
               eval_double(eq.C, t);
    }
    return acc * period / n;
}

// Fixed-point defect of the period map at the rational solution 1/p. The
// map is checked in its contracting direction (forward when the cycle is
// stable, inverse otherwise), so the defect measures periodicity instead of
// the cycle's instability amplifying integration noise.
template <class P>
double poincare_fixed_point_defect(const AbelEquation<TrigQ>& eq, const P& p,
                                   const TrajectoryConfig& cfg = {}) {
    double x0 = 1.0 / eval_double(p, 0.0);
    double exponent = curve_multiplier_exponent(eq, p);
    if (exponent <= 0) return std::abs(poincare_map(eq, x0, cfg) - x0);
    return std::abs(poincare_map_inverse(eq, x0, cfg) - x0);
}

struct DisplacementDerivative {
    double estimate = 0;   // central finite difference of d at 0
    double reference = 0;  // exp(2 pi * mean(C)) - 1
};

// d'(0) probe for any trig equation; the analytic reference comes from the
// variational equation along x == 0.
inline DisplacementDerivative displacement_slope_probe(const AbelEquation<TrigQ>& eq, double h,
                                                       const TrajectoryConfig& cfg = {}) {
    if (!(h > 0)) throw DomainError("finite-difference step must be positive");
    DisplacementDerivative out;
    out.estimate = (displacement(eq, h, cfg) - displacement(eq, -h, cfg)) / (2 * h);
    double mean_c = to_double(eq.C.constant_term());
    out.reference = std::expm1(2 * std::acos(-1.0) * mean_c);
    return out;
}

// The constant-C displacement derivative check: d'(0) = exp(2 pi c) - 1.
inline DisplacementDerivative displacement_derivative(const AbelEquation<TrigQ>& eq, double h,
                                                      const TrajectoryConfig& cfg = {}) {
    if (!eq.C.is_constant()) throw DomainError("displacement derivative check needs constant C");
    if (h < 1e-6 || h > 1e-3) throw DomainError("finite-difference step must lie in [1e-6, 1e-3]");
    return displacement_slope_probe(eq, h, cfg);
}

}  // namespace abel
