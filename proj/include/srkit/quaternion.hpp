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

#ifndef SRKIT_QUATERNION_HPP
#define SRKIT_QUATERNION_HPP

/**
 * @file quaternion.hpp
 * @brief Quaternions over a scalar backend, and the slice/sphere geometry.
 *
 * A nonreal quaternion q has a unique representation q = x + I y with y > 0
 * and I a unit imaginary quaternion (I^2 = -1).  The set x + S y of all such
 * points with the same (x, y) is the sphere S(x, y); real points are
 * degenerate spheres of radius zero.
 *
 * Spheres store the squared radius so that spheres through rational points
 * stay exact under the rational backend.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <ostream>

#include "error.hpp"
#include "scalar.hpp"

namespace srkit {

template <Scalar S>
struct Quaternion {
    S w{0}, x{0}, y{0}, z{0};

    Quaternion() = default;
    Quaternion(S w_) : w(std::move(w_)) {}
    Quaternion(S w_, S x_, S y_, S z_) : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    Quaternion(int w_) : w(w_) {}

    static Quaternion i() { return {S(0), S(1), S(0), S(0)}; }
    static Quaternion j() { return {S(0), S(0), S(1), S(0)}; }
    static Quaternion k() { return {S(0), S(0), S(0), S(1)}; }

    const S& real() const { return w; }
    Quaternion imag() const { return {S(0), x, y, z}; }

    /// |Im q|^2
    S imag_norm2() const { return S(x * x + y * y + z * z); }
    /// |q|^2
    S norm2() const { return S(w * w + x * x + y * y + z * z); }
    double norm() const { return std::sqrt(ScalarTraits<S>::to_double(norm2())); }

    bool is_zero(double tol = ScalarTraits<S>::default_tolerance) const {
        using T = ScalarTraits<S>;
        return T::is_zero(w, tol) && T::is_zero(x, tol) && T::is_zero(y, tol) && T::is_zero(z, tol);
    }
    bool is_real(double tol = ScalarTraits<S>::default_tolerance) const {
        using T = ScalarTraits<S>;
        return T::is_zero(x, tol) && T::is_zero(y, tol) && T::is_zero(z, tol);
    }

    Quaternion conj() const { return {w, S(-x), S(-y), S(-z)}; }

    Quaternion inverse() const {
        S n = norm2();
        if (ScalarTraits<S>::is_zero(n, 0.0)) throw Error(ErrorCode::ZeroFunction, "inverse of the zero quaternion");
        return {S(w / n), S(-x / n), S(-y / n), S(-z / n)};
    }

    Quaternion& operator+=(const Quaternion& o) {
        w += o.w;
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& o) {
        w -= o.w;
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    Quaternion& operator*=(const S& s) {
        w *= s;
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
    Quaternion& operator/=(const S& s) {
        w /= s;
        x /= s;
        y /= s;
        z /= s;
        return *this;
    }

    friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend Quaternion operator-(const Quaternion& a) { return {S(-a.w), S(-a.x), S(-a.y), S(-a.z)}; }
    friend Quaternion operator*(Quaternion a, const S& s) { return a *= s; }
    friend Quaternion operator*(const S& s, Quaternion a) { return a *= s; }
    friend Quaternion operator/(Quaternion a, const S& s) { return a /= s; }

    /// Hamilton product.
    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {S(p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z),
                S(p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y),
                S(p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x),
                S(p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w)};
    }

    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
        using T = ScalarTraits<S>;
        return os << "(" << T::to_string(q.w) << ", " << T::to_string(q.x) << ", " << T::to_string(q.y) << ", "
                  << T::to_string(q.z) << ")";
    }
};

template <Scalar S>
Quaternion<S> qmul(const Quaternion<S>& p, const Quaternion<S>& q) {
    return p * q;
}

template <Scalar S>
Quaternion<S> qinv(const Quaternion<S>& q) {
    return q.inverse();
}

/// Max-component distance; used for float comparisons.
template <Scalar S>
double qdistance(const Quaternion<S>& a, const Quaternion<S>& b) {
    using T = ScalarTraits<S>;
    Quaternion<S> d = a - b;
    double m = std::fabs(T::to_double(d.w));
    m = std::max(m, std::fabs(T::to_double(d.x)));
    m = std::max(m, std::fabs(T::to_double(d.y)));
    return std::max(m, std::fabs(T::to_double(d.z)));
}

template <Scalar To, Scalar From>
Quaternion<To> quaternion_cast(const Quaternion<From>& q) {
    return {scalar_cast<To>(q.w), scalar_cast<To>(q.x), scalar_cast<To>(q.y), scalar_cast<To>(q.z)};
}

/// True when u is purely imaginary with u^2 = -1 (exact, or within tol for floats).
template <Scalar S>
bool is_unit_imaginary(const Quaternion<S>& u, double tol = ScalarTraits<S>::default_tolerance) {
    using T = ScalarTraits<S>;
    if (!T::is_zero(u.w, tol)) return false;
    return T::is_zero(S(u.imag_norm2() - S(1)), tol);
}

/// q = x + I y, y >= 0.  `exact` is false when |Im q| has no exact square
/// root in the backend and y, I carry the nearest double approximations.
template <Scalar S>
struct SliceCoords {
    S x{0};
    S y{0};
    std::optional<Quaternion<S>> unit;
    bool exact = true;

    Quaternion<S> reconstruct() const {
        Quaternion<S> q(x);
        if (unit) q += (*unit) * y;
        return q;
    }
};

template <Scalar S>
SliceCoords<S> slice_decompose(const Quaternion<S>& q, double tol = ScalarTraits<S>::default_tolerance) {
    using T = ScalarTraits<S>;
    SliceCoords<S> out;
    out.x = q.w;
    S n2 = q.imag_norm2();
    if (q.is_real(tol)) return out;
    std::optional<S> root = T::exact_sqrt(n2);
    out.exact = root.has_value();
    out.y = root ? *root : T::sqrt_approx(n2);
    out.unit = q.imag() / out.y;
    return out;
}

/// The imaginary unit function: the I with q in the upper half of C_I.
template <Scalar S>
Quaternion<S> imaginary_unit(const Quaternion<S>& q, double tol = ScalarTraits<S>::default_tolerance) {
    if (q.is_real(tol)) throw Error(ErrorCode::RealArgument, "imaginary unit of a real quaternion");
    return *slice_decompose(q, tol).unit;
}

/// S(a, r) = a + r S, stored through r^2.
template <Scalar S>
struct Sphere {
    S a{0};
    S r2{0};

    Sphere() = default;
    Sphere(S center, S radius_squared) : a(std::move(center)), r2(std::move(radius_squared)) {}

    static Sphere from_radius(const S& center, const S& radius) { return Sphere(center, S(radius * radius)); }

    bool degenerate(double tol = ScalarTraits<S>::default_tolerance) const {
        return ScalarTraits<S>::is_zero(r2, tol);
    }
    /// Exact radius, when one exists in the backend.
    std::optional<S> radius() const { return ScalarTraits<S>::exact_sqrt(r2); }
    double radius_approx() const { return std::sqrt(std::max(0.0, ScalarTraits<S>::to_double(r2))); }

    bool contains(const Quaternion<S>& q, double tol = ScalarTraits<S>::default_tolerance) const {
        using T = ScalarTraits<S>;
        return T::is_zero(S(q.w - a), tol) && T::is_zero(S(q.imag_norm2() - r2), tol);
    }

    /// Real quadratic q^2 - 2 a q + (a^2 + r^2) vanishing exactly on the sphere,
    /// as coefficients {c0, c1, c2}.
    std::array<S, 3> characteristic() const { return {S(a * a + r2), S(-2 * a), S(1)}; }

    /// The point a + r I on the sphere.
    Quaternion<S> point(const Quaternion<S>& unit) const {
        auto r = radius();
        S rr = r ? *r : ScalarTraits<S>::sqrt_approx(r2);
        return Quaternion<S>(a) + unit * rr;
    }

    friend bool operator==(const Sphere& s, const Sphere& t) { return s.a == t.a && s.r2 == t.r2; }
};

/// Float comparison on (a, r) with the given tolerance.
template <Scalar S>
bool sphere_equal(const Sphere<S>& s, const Sphere<S>& t, double tol = 1e-9) {
    if constexpr (is_exact_v<S>) {
        (void)tol;
        return s == t;
    } else {
        return std::fabs(ScalarTraits<S>::to_double(s.a - t.a)) <= tol &&
               std::fabs(s.radius_approx() - t.radius_approx()) <= tol;
    }
}

template <Scalar S>
Sphere<S> symmetrize_point(const Quaternion<S>& q) {
    return Sphere<S>(q.w, q.imag_norm2());
}

}  // namespace srkit

#endif  // SRKIT_QUATERNION_HPP
