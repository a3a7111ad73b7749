#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "abel/classify.hpp"
#include "abel/curves.hpp"

namespace abel {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Right nullspace basis of an exact rational matrix. Forward elimination is
// fraction-free (Bareiss) on the cleared-denominator integer matrix; the
// back substitution produces primitive integer basis vectors with positive
// leading entry, sorted lexicographically.
inline std::vector<std::vector<Rational>> rational_nullspace(const RationalMatrix& m_in,
                                                             std::size_t cols) {
    std::vector<std::vector<Integer>> m;
    for (const auto& row : m_in) {
        if (row.size() != cols) throw DomainError("ragged matrix");
        Integer den(1);
        for (const auto& q : row)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<Integer> zrow;
        zrow.reserve(cols);
        for (const auto& q : row) {
            Rational scaled = q * Rational(den);
            zrow.push_back(scaled.get_num());
        }
        m.push_back(std::move(zrow));
    }

    std::vector<std::size_t> pivot_col;
    Integer prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Integer v = m[i][j] * m[row][col] - m[row][j] * m[i][col];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        pivot_col.push_back(col);
        ++row;
    }
    m.resize(row);  // drop zero rows

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[free_col] = 1;
        for (std::size_t r = row; r-- > 0;) {
            Rational acc(0);
            for (std::size_t j = pivot_col[r] + 1; j < cols; ++j)
                acc += Rational(m[r][j]) * x[j];
            x[pivot_col[r]] = -acc / Rational(m[r][pivot_col[r]]);
        }
        // primitive integer form, positive leading entry
        Integer den(1);
        for (const auto& q : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
        Integer g(0);
        std::vector<Integer> ints;
        for (const auto& q : x) {
            Rational scaled = q * Rational(den);
            ints.push_back(scaled.get_num());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
        }
        int lead = 0;
        for (const auto& z : ints)
            if ((lead = sgn(z)) != 0) break;
        if (lead < 0) g = -g;
        for (std::size_t i = 0; i < cols; ++i) x[i] = Rational(ints[i]) / Rational(g);
        basis.push_back(std::move(x));
    }
    std::sort(basis.begin(), basis.end(), vector_less<Rational>);
    return basis;
}

// Exponent certificate for a Darboux first integral: alpha_0 = 0 for the
// curve x = 0 and, per curve, exponents with sum 0 and
// sum alpha_i A / p_i == 0 as an exact ring identity.
struct DarbouxCertificate {
    std::vector<Rational> alphas;
};

namespace detail {

// Expand one extension scalar into rational coordinates over the basis
// {1, i} x {1, sqrt(d_1), sqrt(d_2), ...}.
inline void scalar_coords(const QuadRational& v, const std::vector<long>& ds,
                          std::vector<Rational>& out) {
    out.push_back(v.a);
    for (long d : ds) out.push_back(v.d == d ? v.b : Rational(0));
}
inline void scalar_coords(const QuadGaussian& v, const std::vector<long>& ds,
                          std::vector<Rational>& out) {
    out.push_back(v.a.re);
    out.push_back(v.a.im);
    for (long d : ds) {
        out.push_back(v.d == d ? v.b.re : Rational(0));
        out.push_back(v.d == d ? v.b.im : Rational(0));
    }
}

}  // namespace detail

// Columns of the cofactor matrix: exact coefficient vectors of A/p_i
// expanded into rational coordinates, plus the all-ones row for sum = 0.
template <class R>
struct CofactorMatrix {
    RationalMatrix rows;
    std::size_t curve_count = 0;
    std::vector<typename RingTraits<R>::ExtElem> columns_exact;  // A / p_i
};

template <class R>
CofactorMatrix<R> cofactor_matrix(const AbelEquation<R>& eq,
                                  const std::vector<InvariantCurve<R>>& curves) {
    using T = RingTraits<R>;
    CofactorMatrix<R> m;
    m.curve_count = curves.size();
    std::vector<long> ds;
    for (const auto& c : curves)
        if (c.k.d != 0 && std::find(ds.begin(), ds.end(), c.k.d) == ds.end()) ds.push_back(c.k.d);
    std::sort(ds.begin(), ds.end());

    int width = 1;
    for (const auto& c : curves) {
        auto complement = T::exact_divide(eq.A, c.base);
        if (!complement) throw DomainError("curve base does not divide A: not invariant");
        auto one = typename T::ExtScalar{scalar_one<typename T::Scalar>()};
        m.columns_exact.push_back(T::to_ext(*complement) * (one / c.k));
        width = std::max(width, T::ext_flat_size(m.columns_exact.back()));
    }
    // row blocks per ring coefficient, one scalar coordinate per row
    std::vector<std::vector<Rational>> coords_per_curve(curves.size());
    std::size_t coord_count = 0;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        auto flat = T::flatten_ext(m.columns_exact[i], width);
        std::vector<Rational> coords;
        for (const auto& v : flat) detail::scalar_coords(v, ds, coords);
        coord_count = coords.size();
        coords_per_curve[i] = std::move(coords);
    }
    for (std::size_t r = 0; r < coord_count; ++r) {
        std::vector<Rational> row(curves.size());
        for (std::size_t i = 0; i < curves.size(); ++i) row[i] = coords_per_curve[i][r];
        m.rows.push_back(std::move(row));
    }
    m.rows.push_back(std::vector<Rational>(curves.size(), Rational(1)));  // sum alpha_i = 0
    return m;
}

// Nontrivial exponents iff the cofactors together with x = 0 are linearly
// dependent; the certificate is rechecked against both defining identities.
template <class R>
std::optional<DarbouxCertificate> cofactor_dependence(const AbelEquation<R>& eq,
                                                      const std::vector<InvariantCurve<R>>& curves) {
    using T = RingTraits<R>;
    for (const auto& c : curves) {
        auto minus_one = typename T::ExtScalar{-scalar_one<typename T::Scalar>()};
        if (!invariance_residual<R>(c.p_ext(), minus_one, eq).first)
            throw DomainError("cofactor dependence requires invariant curves");
    }
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j)
            if (curves[i] == curves[j]) throw DomainError("curves must be pairwise distinct");
    if (curves.empty()) throw DomainError("cofactor dependence needs at least one curve");
    if (curves.size() == 1) return std::nullopt;  // alpha_1 = 0 forced by the sum

    auto m = cofactor_matrix(eq, curves);
    auto basis = rational_nullspace(m.rows, curves.size());
    if (basis.empty()) return std::nullopt;
    DarbouxCertificate cert{basis.front()};

    // recheck: sum alpha_i = 0, sum alpha_i A/p_i = 0, and the cofactor sum
    Rational total(0);
    for (const auto& a : cert.alphas) total += a;
    if (!is_zero(total)) throw InternalInconsistencyError("certificate exponents do not sum to 0");
    typename T::ExtElem combo{};
    typename T::ExtElem cof_combo{};
    for (std::size_t i = 0; i < curves.size(); ++i) {
        auto coeff = typename T::ExtScalar{typename T::Scalar{cert.alphas[i]}};
        combo = combo + m.columns_exact[i] * coeff;
        auto p = curves[i].p_ext();
        cof_combo = cof_combo + (p.derivative() + p * T::to_ext(eq.C)) * coeff;
    }
    if (!T::ext_is_zero(combo))
        throw InternalInconsistencyError("certificate failed sum alpha_i A/p_i = 0");
    if (!T::ext_is_zero(cof_combo))
        throw InternalInconsistencyError("certificate failed the cofactor linear dependence");
    return cert;
}

// Formal first integral x^0 * prod (p_i x - 1)^{alpha_i} as report data.
template <class R>
struct FirstIntegral {
    std::vector<std::pair<Rational, std::string>> factors;  // exponent, curve text
    std::string rendered;
};

template <class R>
FirstIntegral<R> first_integral(const DarbouxCertificate& cert,
                                const std::vector<InvariantCurve<R>>& curves) {
    if (cert.alphas.size() != curves.size())
        throw DomainError("certificate and curve list sizes differ");
    Rational total(0);
    bool any = false;
    for (const auto& a : cert.alphas) {
        total += a;
        any = any || !is_zero(a);
    }
    if (!any || !is_zero(total)) throw DomainError("invalid certificate exponents");
    FirstIntegral<R> out;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (is_zero(cert.alphas[i])) continue;
        std::string curve_text = "(" + render(curves[i].p_ext()) + ")*x-1";
        out.factors.emplace_back(cert.alphas[i], "(" + curve_text + ")");
        if (!out.rendered.empty()) out.rendered += "*";
        out.rendered += "(" + curve_text + ")^(" + str(cert.alphas[i]) + ")";
    }
    return out;
}

// Degree-threshold statements attached to the classification cases.
enum class ThresholdMeaning { IntegrableIfExceeded, LimitCycleBound, CurveBound };

struct IntegrabilityThreshold {
    long long value = 0;
    ThresholdMeaning meaning = ThresholdMeaning::IntegrableIfExceeded;
};

template <class R>
IntegrabilityThreshold integrability_threshold(const AbelEquation<R>& eq) {
    BoundReport report = classify_bounds(eq);
    switch (report.label) {
        case BoundCase::B21:
            return {*report.darboux_threshold, ThresholdMeaning::IntegrableIfExceeded};
        case BoundCase::B22:
            return {*report.darboux_threshold, ThresholdMeaning::LimitCycleBound};
        case BoundCase::C:
            return {*report.darboux_threshold, ThresholdMeaning::CurveBound};
        default:
            throw DomainError("threshold not applicable in case " + bound_case_name(report.label));
    }
}

// The dimension-count construction behind the integrability thresholds:
// given r >= 2(d+2) vectors in a (d+1)-dimensional space, split them in two
// halves, take a nullvector of each, and cross-scale so the combined
// exponents sum to zero. Always yields a valid nontrivial certificate.
inline std::vector<Rational> threshold_certificate(const std::vector<std::vector<Rational>>& vecs) {
    if (vecs.empty()) throw DomainError("no vectors");
    std::size_t dim = vecs[0].size();
    std::size_t r = vecs.size();
    if (r < 2 * (dim + 1)) throw DomainError("need at least 2(d+2) vectors in dimension d+1");
    std::size_t half = dim + 1;

    auto null_of = [&](std::size_t lo, std::size_t hi) {
        RationalMatrix rows(dim, std::vector<Rational>(hi - lo, Rational(0)));
        for (std::size_t c = lo; c < hi; ++c)
            for (std::size_t d = 0; d < dim; ++d) rows[d][c - lo] = vecs[c][d];
        auto basis = rational_nullspace(rows, hi - lo);
        if (basis.empty())
            throw InternalInconsistencyError("dimension count guarantees a nullvector");
        return basis.front();
    };
    auto lambda = null_of(0, half);
    auto mu = null_of(half, r);

    Rational sum_l(0), sum_m(0);
    for (const auto& v : lambda) sum_l += v;
    for (const auto& v : mu) sum_m += v;

    std::vector<Rational> alpha(r, Rational(0));
    if (is_zero(sum_l)) {
        for (std::size_t i = 0; i < half; ++i) alpha[i] = lambda[i];
    } else if (is_zero(sum_m)) {
        for (std::size_t i = half; i < r; ++i) alpha[i] = mu[i - half];
    } else {
        for (std::size_t i = 0; i < half; ++i) alpha[i] = sum_m * lambda[i];
        for (std::size_t i = half; i < r; ++i) alpha[i] = -sum_l * mu[i - half];
    }
    return alpha;
}

}  // namespace abel
