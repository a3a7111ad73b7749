#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "abel/equation.hpp"
#include "abel/ring.hpp"

namespace abel {

// Invariant curve p(t) x - 1 = 0, stored as p = k * base with base the
// canonical representative of its proportionality class. base divides A and
// is nonvanishing on the reals; k is a nonzero constant in the scalar field
// or one quadratic extension of it.
template <class R>
struct InvariantCurve {
    using Traits = RingTraits<R>;
    R base;
    typename Traits::ExtScalar k;

    typename Traits::ExtElem p_ext() const { return ext_scaled(base, k); }
    // p as a plain ring element when the constant has no surd part.
    std::optional<R> p_plain() const {
        if (k.d != 0) return std::nullopt;
        return base * k.a;
    }
    friend bool operator==(const InvariantCurve& x, const InvariantCurve& y) {
        return x.base == y.base && x.k == y.k;
    }
};

// Cofactor K(t,x) = K2 x^2 + K1 x + K0 of an invariant curve; K0 is zero for
// every curve p x - 1 = 0 and is kept explicit for reporting.
template <class R>
struct Cofactor {
    R k2;                                 // equals A
    typename RingTraits<R>::ExtElem k1;   // equals -(p' + p C)
    typename RingTraits<R>::ExtElem k0;   // zero
};

template <class R>
struct DivisorCandidate {
    R divisor;     // canonical, non-constant, nonvanishing divisor of A
    R complement;  // A / divisor, exact
    std::vector<typename RingTraits<R>::ExtScalar> constants;  // solved k values
};

struct VerifyOutcome {
    bool ok = false;
    std::string residual;  // rendered symbolic residual, "0" when ok
};

// Invariance test for a candidate (p, c) against the defining identity:
// the curve p x + c = 0 is invariant iff c is a nonzero constant and
// c^2 A - (c B - (p' + p C)) p == 0 in the ring.
template <class R>
std::pair<bool, typename RingTraits<R>::ExtElem> invariance_residual(
    const typename RingTraits<R>::ExtElem& p, const typename RingTraits<R>::ExtScalar& c,
    const AbelEquation<R>& eq) {
    using T = RingTraits<R>;
    auto a = T::to_ext(eq.A);
    auto b = T::to_ext(eq.B);
    auto cc = T::to_ext(eq.C);
    auto w = p.derivative() + p * cc;                      // p' + pC
    auto residual = a * (c * c) - (b * c - w) * p;         // c^2 A - (cB - w) p
    if (abel::is_zero(c)) return {false, residual};
    return {T::ext_is_zero(residual), residual};
}

template <class R>
VerifyOutcome verify_invariance(const typename RingTraits<R>::ExtElem& p,
                                const typename RingTraits<R>::ExtScalar& c,
                                const AbelEquation<R>& eq) {
    auto [ok, residual] = invariance_residual<R>(p, c, eq);
    return {ok, ok ? std::string("0") : render(residual)};
}

template <class R>
VerifyOutcome verify_invariance(const R& p, const typename RingTraits<R>::Scalar& c,
                                const AbelEquation<R>& eq) {
    using T = RingTraits<R>;
    return verify_invariance<R>(T::to_ext(p), typename T::ExtScalar{c}, eq);
}

namespace detail {

// Roots of a degree <= 2 polynomial over the scalar field, kept exact in the
// field or one quadratic extension. Roots needing an unsupported extension
// (non-real surds over Q, mixed surds over Q(i)) are skipped and counted.
template <class Scalar>
std::vector<Quad<Scalar>> constant_roots(const Polynomial<Scalar>& g, int* skipped) {
    std::vector<Quad<Scalar>> roots;
    if (g.degree() == 1) {
        roots.push_back(Quad<Scalar>{-(g.coeff(0) / g.coeff(1))});
        return roots;
    }
    if (g.degree() != 2) return roots;
    Scalar a = g.coeff(2), b = g.coeff(1), c = g.coeff(0);
    Scalar disc = b * b - mul_int(a * c, 4);
    std::optional<Quad<Scalar>> root = quad_sqrt(disc);
    if (!root) {
        if (skipped) ++*skipped;
        return roots;
    }
    Quad<Scalar> half{Scalar{} - b};
    Quad<Scalar> den{mul_int(a, 2)};
    Quad<Scalar> r1 = (half + *root) / den;
    Quad<Scalar> r2 = (half - *root) / den;
    roots.push_back(r1);
    if (!(r1 == r2)) roots.push_back(r2);
    return roots;
}

template <class F>
void parallel_for(std::size_t n, int jobs, F&& body) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex err_mutex;
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

// All canonical non-constant divisors of A that are nonvanishing on the
// reals, one per proportionality class, with the exact complement A/divisor.
template <class R>
std::vector<DivisorCandidate<R>> enumerate_divisors(const AbelEquation<R>& eq) {
    using T = RingTraits<R>;
    if (eq.A.degree() <= 0) throw OutOfScopeError("constant A: delegated case");
    std::vector<RingAtom<R>> usable;
    for (auto& atom : T::atoms(eq.A))
        if (atom.nonvanishing) usable.push_back(std::move(atom));

    long long count = 1;
    for (const auto& atom : usable) {
        count *= atom.multiplicity + 1;
        if (count > 100000)
            throw DomainError("divisor enumeration too large: A has too many nonvanishing factors");
    }
    std::vector<DivisorCandidate<R>> out;
    std::vector<int> mult(usable.size(), 0);
    while (true) {
        // next multiplicity tuple, odometer order
        std::size_t i = 0;
        while (i < usable.size() && mult[i] == usable[i].multiplicity) {
            mult[i] = 0;
            ++i;
        }
        if (i == usable.size()) break;
        ++mult[i];
        R divisor = T::one();
        for (std::size_t j = 0; j < usable.size(); ++j)
            for (int c = 0; c < mult[j]; ++c) divisor = divisor * usable[j].factor;
        if (divisor.degree() <= 0) continue;
        divisor = T::canonical(divisor).first;
        auto complement = T::exact_divide(eq.A, divisor);
        if (!complement)
            throw InternalInconsistencyError("enumerated divisor does not divide A");
        out.push_back({std::move(divisor), std::move(*complement), {}});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.divisor.degree() != y.divisor.degree())
            return x.divisor.degree() < y.divisor.degree();
        int n = std::max(T::flat_size(x.divisor), T::flat_size(y.divisor));
        return vector_less(T::flatten(x.divisor, n), T::flatten(y.divisor, n));
    });
    return out;
}

// Constants k for which k*divisor defines an invariant curve. With
// m = A/divisor and w = divisor' + divisor*C, the curve condition is the
// ring identity m + k B + k^2 w = 0; each coefficient gives a quadratic in
// k and the admissible k are the roots of their gcd.
template <class R>
std::vector<typename RingTraits<R>::ExtScalar> solve_constant(const DivisorCandidate<R>& cand,
                                                              const AbelEquation<R>& eq,
                                                              int* skipped_roots = nullptr) {
    using T = RingTraits<R>;
    using Scalar = typename T::Scalar;
    R w = cand.divisor.derivative() + cand.divisor * eq.C;
    int n = std::max({T::flat_size(cand.complement), T::flat_size(eq.B), T::flat_size(w)});
    auto mv = T::flatten(cand.complement, n);
    auto bv = T::flatten(eq.B, n);
    auto wv = T::flatten(w, n);
    Polynomial<Scalar> g;
    bool have = false;
    for (int j = 0; j < n; ++j) {
        Polynomial<Scalar> qj = Polynomial<Scalar>::from_coeffs(
            {mv[static_cast<std::size_t>(j)], bv[static_cast<std::size_t>(j)],
             wv[static_cast<std::size_t>(j)]});
        if (qj.is_zero_poly()) continue;
        g = have ? gcd(g, qj) : qj.monic();
        have = true;
        if (g.degree() == 0) break;
    }
    if (!have) throw InternalInconsistencyError("all constant equations vanished (B == 0?)");
    std::vector<typename T::ExtScalar> ks;
    for (auto& k : detail::constant_roots(g, skipped_roots)) {
        if (abel::is_zero(k)) continue;  // k = 0 never satisfies m != 0
        ks.push_back(std::move(k));
    }
    return ks;
}

template <class R>
void sort_curves(std::vector<InvariantCurve<R>>& curves) {
    using T = RingTraits<R>;
    std::sort(curves.begin(), curves.end(), [](const auto& x, const auto& y) {
        if (x.base.degree() != y.base.degree()) return x.base.degree() < y.base.degree();
        int n = std::max(T::flat_size(x.base), T::flat_size(y.base));
        auto xv = T::flatten(x.base, n);
        auto yv = T::flatten(y.base, n);
        if (xv != yv) return vector_less(xv, yv);
        return scalar_less(x.k, y.k);
    });
}

// Complete list of invariant curves p x - 1 = 0 within the supported
// constant field, canonically ordered. Soundness is rechecked: every curve
// returned satisfies the invariance identity exactly.
template <class R>
std::vector<InvariantCurve<R>> find_invariant_curves(const AbelEquation<R>& eq, int jobs = 1,
                                                     int* skipped_roots = nullptr) {
    using T = RingTraits<R>;
    auto candidates = enumerate_divisors(eq);
    std::vector<std::vector<InvariantCurve<R>>> per_candidate(candidates.size());
    std::vector<int> skipped(candidates.size(), 0);
    detail::parallel_for(candidates.size(), jobs, [&](std::size_t i) {
        for (auto& k : solve_constant(candidates[i], eq, &skipped[i])) {
            InvariantCurve<R> curve{candidates[i].divisor, k};
            auto [ok, residual] =
                invariance_residual<R>(curve.p_ext(), typename T::ExtScalar{-scalar_one<typename T::Scalar>()}, eq);
            if (!ok)
                throw InternalInconsistencyError(
                    "solved constant failed the invariance identity");
            per_candidate[i].push_back(std::move(curve));
        }
    });
    std::vector<InvariantCurve<R>> curves;
    for (auto& group : per_candidate)
        for (auto& c : group) curves.push_back(std::move(c));
    if (skipped_roots)
        for (int s : skipped) *skipped_roots += s;
    sort_curves(curves);
    return curves;
}

template <class R>
Cofactor<R> cofactor_of(const InvariantCurve<R>& curve, const AbelEquation<R>& eq) {
    using T = RingTraits<R>;
    auto p = curve.p_ext();
    auto minus_one = typename T::ExtScalar{-scalar_one<typename T::Scalar>()};
    auto [ok, residual] = invariance_residual<R>(p, minus_one, eq);
    if (!ok) throw DomainError("not invariant: cofactor is undefined");
    auto k1 = -(p.derivative() + p * T::to_ext(eq.C));
    return {eq.A, std::move(k1), typename T::ExtElem{}};
}

}  // namespace abel
