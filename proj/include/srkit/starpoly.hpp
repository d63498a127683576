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

#ifndef SRKIT_STARPOLY_HPP
#define SRKIT_STARPOLY_HPP

/**
 * @file starpoly.hpp
 * @brief The *-algebra on QPoly: conjugates, symmetrization, splittings into
 * components, stem-function evaluation and constant vectorial classes.
 */

#include <array>
#include <optional>
#include <utility>

#include "qpoly.hpp"

namespace srkit {

template <Scalar S>
QPoly<S> star_mul(const QPoly<S>& f, const QPoly<S>& g) {
    return f * g;
}

/// Conjugate every coefficient: f^c = f_0 - f_v.
template <Scalar S>
QPoly<S> regular_conjugate(const QPoly<S>& f) {
    std::vector<Quaternion<S>> c;
    c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) c.push_back(a.conj());
    return QPoly<S>(f.min_degree(), std::move(c));
}

/// f^s = f * f^c.  The product has real coefficients; the imaginary parts
/// are dropped explicitly so float round-off cannot leave residue.
template <Scalar S>
QPoly<S> symmetrization(const QPoly<S>& f) {
    QPoly<S> p = f * regular_conjugate(f);
    return p.component(0);
}

/// f^s as a real polynomial; requires no negative powers.
template <Scalar S>
RealPoly<S> symmetrization_real(const QPoly<S>& f) {
    return symmetrization(f).real_part();
}

/// (f_0, f_v): scalar part (real coefficients) and vector part.
template <Scalar S>
std::pair<QPoly<S>, QPoly<S>> scalar_vector_split(const QPoly<S>& f) {
    QPoly<S> f0 = f.component(0);
    return {f0, f - f0};
}

/// (f_0, f_1, f_2, f_3), real-coefficient, with f = f_0 + f_1 i + f_2 j + f_3 k.
template <Scalar S>
std::array<QPoly<S>, 4> component_decompose(const QPoly<S>& f) {
    return {f.component(0), f.component(1), f.component(2), f.component(3)};
}

template <Scalar S>
QPoly<S> component_recompose(const std::array<QPoly<S>, 4>& parts) {
    using Q = Quaternion<S>;
    return parts[0] + parts[1] * QPoly<S>(Q::i()) + parts[2] * QPoly<S>(Q::j()) + parts[3] * QPoly<S>(Q::k());
}

/// Stem value F(x + iota y) = F1 + iota F2 with quaternion-valued F1, F2.
template <Scalar S>
struct StemValue {
    Quaternion<S> F1;
    Quaternion<S> F2;

    /// phi_J(F) = F1 + J F2.
    Quaternion<S> induce(const Quaternion<S>& J) const { return F1 + J * F2; }
};

/// The stem of f at the complex point x + iota y.  Powers z^n = u_n + iota v_n
/// are formed by complex recurrence in the scalar backend.
template <Scalar S>
StemValue<S> stem_value(const QPoly<S>& f, const S& x, const S& y) {
    StemValue<S> out;
    if (f.is_zero()) return out;
    auto accumulate = [&](int n, const S& u, const S& v) {
        const Quaternion<S> a = f.coeff(n);
        out.F1 += a * u;
        out.F2 += a * v;
    };
    if (f.degree() >= 0) {
        S u(1), v(0);
        for (int n = 0; n <= f.degree(); ++n) {
            if (n >= f.min_degree()) accumulate(n, u, v);
            S nu = S(u * x - v * y);
            S nv = S(u * y + v * x);
            u = std::move(nu);
            v = std::move(nv);
        }
    }
    if (f.min_degree() < 0) {
        S n2 = S(x * x + y * y);
        if (ScalarTraits<S>::is_zero(n2, 0.0)) throw Error(ErrorCode::PoleAtZero, "negative powers at z = 0");
        S ix = S(x / n2), iy = S(-y / n2);
        S u = ix, v = iy;
        for (int n = -1; n >= f.min_degree(); --n) {
            if (n <= f.degree()) accumulate(n, u, v);
            S nu = S(u * ix - v * iy);
            S nv = S(u * iy + v * ix);
            u = std::move(nu);
            v = std::move(nv);
        }
    }
    return out;
}

template <Scalar S>
Quaternion<S> stem_evaluate(const QPoly<S>& f, const S& x, const S& y, const Quaternion<S>& J,
                            double tol = ScalarTraits<S>::default_tolerance) {
    if (!is_unit_imaginary(J, tol)) throw Error(ErrorCode::NotUnitImaginary, "J must satisfy J^2 = -1");
    return stem_value(f, x, y).induce(J);
}

/// Constant vectorial class: span{1, v} for a unit imaginary v, or the
/// slice-preserving class when v is absent.
template <Scalar S>
struct VectorClassTag {
    std::optional<Quaternion<S>> v;

    static VectorClassTag zero() { return {}; }
    static VectorClassTag of(const Quaternion<S>& u, double tol = ScalarTraits<S>::default_tolerance) {
        if (!is_unit_imaginary(u, tol)) throw Error(ErrorCode::NotUnitImaginary, "class direction must satisfy v^2 = -1");
        return {u};
    }
};

/// Coefficient of a along v: the real number b with Im a = b v, if it exists.
template <Scalar S>
std::optional<S> imaginary_along(const Quaternion<S>& a, const Quaternion<S>& v,
                                 double tol = ScalarTraits<S>::default_tolerance) {
    S b = S(a.x * v.x + a.y * v.y + a.z * v.z);
    Quaternion<S> rest = a.imag() - v * b;
    if (!rest.is_zero(tol)) return std::nullopt;
    return b;
}

template <Scalar S>
bool in_vector_class(const QPoly<S>& f, const VectorClassTag<S>& tag, double tol = ScalarTraits<S>::default_tolerance) {
    if (!tag.v) return f.is_slice_preserving(tol);
    for (const auto& a : f.coeffs())
        if (!imaginary_along(a, *tag.v, tol)) return false;
    return true;
}

}  // namespace srkit

#endif  // SRKIT_STARPOLY_HPP
