/*
   Copyright 2026 The srkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SRKIT_MATREP_HPP
#define SRKIT_MATREP_HPP

/**
 * @file matrep.hpp
 * @brief Real matrix representations of QPoly and the *-exponential and
 * *-logarithm.
 *
 * With f = f_0 + f_1 i + f_2 j + f_3 k, M_f is the matrix of left
 * multiplication by f on the basis (1, i, j, k):
 *
 *     | f_0  -f_1  -f_2  -f_3 |
 *     | f_1   f_0  -f_3   f_2 |
 *     | f_2   f_3   f_0  -f_1 |
 *     | f_3  -f_2   f_1   f_0 |
 *
 * Its entries are real-coefficient polynomials, which commute, so matrix
 * products are well defined and M_{f*g} = M_f M_g.
 */

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "starpoly.hpp"

namespace srkit {

template <Scalar S>
struct MatRep4 {
    std::array<std::array<QPoly<S>, 4>, 4> entries{};

    const QPoly<S>& operator()(int r, int c) const { return entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    QPoly<S>& operator()(int r, int c) { return entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

    static MatRep4 identity() {
        MatRep4 m;
        for (int n = 0; n < 4; ++n) m(n, n) = QPoly<S>(1);
        return m;
    }

    MatRep4 transpose() const {
        MatRep4 t;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) t(r, c) = (*this)(c, r);
        return t;
    }

    friend MatRep4 operator+(const MatRep4& a, const MatRep4& b) {
        MatRep4 out;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) out(r, c) = a(r, c) + b(r, c);
        return out;
    }

    friend MatRep4 operator*(const MatRep4& a, const MatRep4& b) {
        MatRep4 out;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                QPoly<S> acc;
                for (int k = 0; k < 4; ++k) acc += a(r, k) * b(k, c);
                out(r, c) = acc;
            }
        return out;
    }

    friend bool operator==(const MatRep4& a, const MatRep4& b) { return a.entries == b.entries; }

    /// Leibniz expansion over the 24 permutations.
    QPoly<S> det() const {
        std::array<int, 4> p{0, 1, 2, 3};
        QPoly<S> out;
        do {
            int inversions = 0;
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b)
                    if (p[static_cast<std::size_t>(a)] > p[static_cast<std::size_t>(b)]) ++inversions;
            QPoly<S> term = (*this)(0, p[0]) * (*this)(1, p[1]) * (*this)(2, p[2]) * (*this)(3, p[3]);
            if (inversions % 2) out -= term;
            else out += term;
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }

    /// Read f back from the first column.
    QPoly<S> generator() const {
        using Q = Quaternion<S>;
        return entries[0][0] + entries[1][0] * QPoly<S>(Q::i()) + entries[2][0] * QPoly<S>(Q::j()) +
               entries[3][0] * QPoly<S>(Q::k());
    }
};

template <Scalar S>
MatRep4<S> to_matrix(const QPoly<S>& f) {
    auto [f0, f1, f2, f3] = component_decompose(f);
    MatRep4<S> m;
    m.entries = {{{f0, -f1, -f2, -f3}, {f1, f0, -f3, f2}, {f2, f3, f0, -f1}, {f3, -f2, f1, f0}}};
    return m;
}

/// det M_f, checked against (f^s)^2.  The check is exact for rationals and
/// relative to the coefficient scale for floats.
template <Scalar S>
QPoly<S> det_check(const QPoly<S>& f) {
    QPoly<S> d = to_matrix(f).det();
    QPoly<S> fs = symmetrization(f);
    QPoly<S> expected = fs * fs;
    bool ok;
    if constexpr (is_exact_v<S>) {
        ok = d == expected;
    } else {
        ok = (d - expected).max_coeff_norm() <= 1e-9 * std::max(1.0, expected.max_coeff_norm());
    }
    if (!ok) throw std::logic_error("det M_f differs from (f^s)^2");
    return d;
}

/// 2x2 representation [[f0, -f1], [f1, f0]] of f = f0 + f1 v.
template <Scalar S>
struct MatRep2 {
    QPoly<S> f0;
    QPoly<S> f1;
    Quaternion<S> v;

    QPoly<S> det() const { return f0 * f0 + f1 * f1; }
    QPoly<S> generator() const { return f0 + f1 * QPoly<S>(v); }

    friend MatRep2 operator*(const MatRep2& a, const MatRep2& b) {
        return {a.f0 * b.f0 - a.f1 * b.f1, a.f0 * b.f1 + a.f1 * b.f0, a.v};
    }
    friend MatRep2 operator+(const MatRep2& a, const MatRep2& b) { return {a.f0 + b.f0, a.f1 + b.f1, a.v}; }
    friend bool operator==(const MatRep2& a, const MatRep2& b) { return a.f0 == b.f0 && a.f1 == b.f1 && a.v == b.v; }
};

template <Scalar S>
MatRep2<S> to_matrix2(const QPoly<S>& f, const VectorClassTag<S>& tag, double tol = ScalarTraits<S>::default_tolerance) {
    if (!tag.v) throw Error(ErrorCode::NotInClass, "the 2x2 representation needs a direction v");
    std::vector<Quaternion<S>> c0, c1;
    for (const auto& a : f.coeffs()) {
        auto b = imaginary_along(a, *tag.v, tol);
        if (!b) throw Error(ErrorCode::NotInClass, "coefficient outside span{1, v}");
        c0.emplace_back(a.w);
        c1.emplace_back(*b);
    }
    return {QPoly<S>(f.min_degree(), std::move(c0)), QPoly<S>(f.min_degree(), std::move(c1)), *tag.v};
}

/// Row-sum norm of M_f at a point, together with |f| at the point and at
/// its mirror image x - I y in the same slice.
struct MatNormReport {
    std::array<double, 4> point{};
    double m_norm = 0;
    double f_abs = 0;
    double f_abs_mirror = 0;
    /// |f(q)| <= m_norm <= 4 max(|f(q)|, |f(mirror)|)
    bool chain_holds = false;
};

template <Scalar S>
MatNormReport mat_norm_at(const QPoly<S>& f, const Quaternion<S>& q) {
    using T = ScalarTraits<S>;
    MatNormReport rep;
    rep.point = {T::to_double(q.w), T::to_double(q.x), T::to_double(q.y), T::to_double(q.z)};
    auto sc = slice_decompose(q);
    double x = T::to_double(sc.x), y = T::to_double(sc.y);
    QPoly<double> fd = qpoly_cast<double>(f);
    for (int l = 0; l < 4; ++l) {
        StemValue<double> st = stem_value(fd.component(l), x, y);
        rep.m_norm += std::hypot(st.F1.w, st.F2.w);
    }
    Quaternion<double> qd = quaternion_cast<double>(q);
    Quaternion<double> mirror = Quaternion<double>(qd.w) - qd.imag();
    rep.f_abs = fd(qd).norm();
    rep.f_abs_mirror = fd(mirror).norm();
    double slack = 1e-12 * std::max(1.0, rep.m_norm);
    rep.chain_holds = rep.f_abs <= rep.m_norm + slack && rep.m_norm <= 4 * std::max(rep.f_abs, rep.f_abs_mirror) + slack;
    return rep;
}

/// Controls for the truncated *-series.
struct SeriesOptions {
    int trunc = 64;
    /// Terms are measured by sum_n sum_j |a_{n,j}| max(r_inner^n, r_outer^n).
    double r_inner = 1.0;
    double r_outer = 1.0;
    double term_tol = 1e-14;
    int max_terms = 4096;
    /// Coefficients whose weighted size falls below this are dropped.
    double prune = 1e-30;
};

struct SeriesReport {
    QPoly<double> value;
    int terms = 0;
    double last_term = 0;
    /// True when the series ran past the requested truncation depth.
    bool continued = false;
};

namespace detail {

using LQ = QPoly<long double>;

inline double weighted_norm(const LQ& f, double r_inner, double r_outer) {
    long double s = 0;
    for (int n = f.min_degree(); n <= f.degree(); ++n) {
        long double w = std::max(std::pow(static_cast<long double>(r_inner), n), std::pow(static_cast<long double>(r_outer), n));
        const Quaternion<long double>& a = f.coeff(n);
        s += (std::fabs(a.w) + std::fabs(a.x) + std::fabs(a.y) + std::fabs(a.z)) * w;
    }
    return static_cast<double>(s);
}

inline LQ prune(const LQ& f, const SeriesOptions& o) {
    std::vector<Quaternion<long double>> c;
    c.reserve(f.coeffs().size());
    for (int n = f.min_degree(); n <= f.degree(); ++n) {
        long double w = std::max(std::pow(static_cast<long double>(o.r_inner), n), std::pow(static_cast<long double>(o.r_outer), n));
        Quaternion<long double> a = f.coeff(n);
        if (static_cast<long double>(a.norm()) * w < o.prune) a = {};
        c.push_back(a);
    }
    return LQ(f.min_degree(), std::move(c));
}

/// sum_{n>=0} f^{*n}/n!, Laurent f allowed.
inline SeriesReport exp_series(const QPoly<double>& f, const SeriesOptions& o) {
    LQ x = qpoly_cast<long double>(f);
    LQ sum(1), term(1);
    SeriesReport rep;
    int n = 1;
    for (; n <= o.max_terms; ++n) {
        term = prune(term * x, o) / static_cast<long double>(n);
        sum += term;
        rep.last_term = weighted_norm(term, o.r_inner, o.r_outer);
        if (rep.last_term < o.term_tol) break;
    }
    if (n > o.max_terms) throw Error(ErrorCode::OutsideConvergence, "exp series did not settle within the term cap");
    rep.terms = n;
    rep.continued = n > o.trunc;
    rep.value = qpoly_cast<double>(prune(sum, o));
    return rep;
}

/// -sum_{n>=1} (1 - f)^{*n}/n, gated on the weighted norm of 1 - f.
inline SeriesReport log_series(const QPoly<double>& f, const SeriesOptions& o) {
    LQ g = LQ(1) - qpoly_cast<long double>(f);
    double gate = weighted_norm(g, o.r_inner, o.r_outer);
    if (!(gate < 1.0))
        throw Error(ErrorCode::OutsideConvergence, "coefficient norm of 1 - f is " + std::to_string(gate) + ", needs < 1");
    LQ sum, power(1);
    SeriesReport rep;
    int n = 1;
    for (; n <= o.max_terms; ++n) {
        power = prune(power * g, o);
        LQ term = power / static_cast<long double>(n);
        sum -= term;
        rep.last_term = weighted_norm(term, o.r_inner, o.r_outer);
        if (rep.last_term < o.term_tol) break;
    }
    if (n > o.max_terms) throw Error(ErrorCode::OutsideConvergence, "log series did not settle within the term cap");
    rep.terms = n;
    rep.continued = n > o.trunc;
    rep.value = qpoly_cast<double>(prune(sum, o));
    return rep;
}

}  // namespace detail

/// exp_*(f) with its truncation depth.
inline SeriesReport exp_star_report(const QPoly<double>& f, const SeriesOptions& o = {}) {
    f.require_polynomial("exp_star");
    return detail::exp_series(f, o);
}

inline QPoly<double> exp_star(const QPoly<double>& f, int trunc = 64) {
    SeriesOptions o;
    o.trunc = trunc;
    return exp_star_report(f, o).value;
}

inline SeriesReport log_star_report(const QPoly<double>& f, const SeriesOptions& o = {}) {
    f.require_polynomial("log_star");
    return detail::log_series(f, o);
}

inline QPoly<double> log_star(const QPoly<double>& f, int trunc = 64) {
    SeriesOptions o;
    o.trunc = trunc;
    return log_star_report(f, o).value;
}

}  // namespace srkit

#endif  // SRKIT_MATREP_HPP
