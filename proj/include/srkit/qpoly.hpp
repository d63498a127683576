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

#ifndef SRKIT_QPOLY_HPP
#define SRKIT_QPOLY_HPP

/**
 * @file qpoly.hpp
 * @brief Laurent polynomials f(q) = sum_n q^n a_n with right quaternion coefficients.
 *
 * Multiplication is the regular (*-)product, which on right-coefficient
 * polynomials is the Cauchy convolution of coefficient sequences.  The
 * pointwise value uses Horner's scheme with the variable on the left.
 */

#include <algorithm>
#include <cstddef>
#include <limits>
#include <ostream>
#include <utility>
#include <vector>

#include "error.hpp"
#include "quaternion.hpp"
#include "realpoly.hpp"

namespace srkit {

template <Scalar S>
class QPoly {
public:
    using Quat = Quaternion<S>;

    QPoly() = default;
    QPoly(const Quat& c) : coeffs_{c} { trim(); }
    QPoly(const S& c) : coeffs_{Quat(c)} { trim(); }
    QPoly(int c) : coeffs_{Quat(S(c))} { trim(); }
    QPoly(int min_degree, std::vector<Quat> coeffs) : min_degree_(min_degree), coeffs_(std::move(coeffs)) { trim(); }

    /// q^n c
    static QPoly monomial(int n, const Quat& c) { return QPoly(n, {c}); }
    /// The variable q.
    static QPoly variable() { return monomial(1, Quat(S(1))); }
    /// q - c, the linear factor vanishing at c.
    static QPoly linear(const Quat& c) { return QPoly(0, {-c, Quat(S(1))}); }

    static QPoly from_real(const RealPoly<S>& p) {
        std::vector<Quat> c;
        c.reserve(p.coeffs().size());
        for (const auto& v : p.coeffs()) c.emplace_back(v);
        return QPoly(0, std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int min_degree() const { return min_degree_; }
    /// Highest power present; -1 for the zero polynomial.
    int degree() const { return is_zero() ? -1 : min_degree_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Quat>& coeffs() const { return coeffs_; }

    Quat coeff(int n) const {
        if (n < min_degree_ || n > degree()) return Quat();
        return coeffs_[static_cast<std::size_t>(n - min_degree_)];
    }

    /// No negative powers.
    bool is_polynomial() const { return is_zero() || min_degree_ >= 0; }

    bool is_slice_preserving(double tol = ScalarTraits<S>::default_tolerance) const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const Quat& a) { return a.is_real(tol); });
    }

    /// Real parts of the coefficients as a polynomial; requires is_polynomial().
    RealPoly<S> real_part() const {
        require_polynomial("real_part");
        std::vector<S> c(static_cast<std::size_t>(degree() + 1), S(0));
        for (int n = min_degree_; n <= degree(); ++n) c[static_cast<std::size_t>(n)] = coeff(n).w;
        return RealPoly<S>(std::move(c));
    }

    /// Component l (0 = real, 1..3 = i, j, k) of every coefficient.
    QPoly component(int l) const {
        std::vector<Quat> c;
        c.reserve(coeffs_.size());
        for (const auto& a : coeffs_) {
            const S& v = l == 0 ? a.w : l == 1 ? a.x : l == 2 ? a.y : a.z;
            c.emplace_back(v);
        }
        return QPoly(min_degree_, std::move(c));
    }

    /// Multiply by q^k.
    QPoly shift(int k) const {
        QPoly out(*this);
        if (!out.is_zero()) out.min_degree_ += k;
        return out;
    }

    /// Only the powers n with lo <= n <= hi.
    QPoly slice(int lo, int hi) const {
        std::vector<Quat> c;
        int from = std::max(lo, min_degree_);
        int to = std::min(hi, degree());
        for (int n = from; n <= to; ++n) c.push_back(coeff(n));
        return QPoly(from, std::move(c));
    }

    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    friend QPoly operator+(const QPoly& f, const QPoly& g) { return combine(f, g, false); }
    friend QPoly operator-(const QPoly& f, const QPoly& g) { return combine(f, g, true); }
    friend QPoly operator-(const QPoly& f) {
        std::vector<Quat> c;
        c.reserve(f.coeffs_.size());
        for (const auto& a : f.coeffs_) c.push_back(-a);
        return QPoly(f.min_degree_, std::move(c));
    }

    /// Regular product: c_n = sum_k a_k b_{n-k}.
    friend QPoly operator*(const QPoly& f, const QPoly& g) {
        if (f.is_zero() || g.is_zero()) return {};
        std::vector<Quat> c(f.coeffs_.size() + g.coeffs_.size() - 1);
        for (std::size_t n = 0; n < f.coeffs_.size(); ++n)
            for (std::size_t m = 0; m < g.coeffs_.size(); ++m) c[n + m] += f.coeffs_[n] * g.coeffs_[m];
        return QPoly(f.min_degree_ + g.min_degree_, std::move(c));
    }

    /// Real scalar multiple.
    friend QPoly operator*(const S& s, const QPoly& f) {
        std::vector<Quat> c(f.coeffs_);
        for (auto& a : c) a *= s;
        return QPoly(f.min_degree_, std::move(c));
    }
    friend QPoly operator/(const QPoly& f, const S& s) {
        std::vector<Quat> c(f.coeffs_);
        for (auto& a : c) a /= s;
        return QPoly(f.min_degree_, std::move(c));
    }

    friend bool operator==(const QPoly& f, const QPoly& g) {
        return f.min_degree_ == g.min_degree_ && f.coeffs_ == g.coeffs_;
    }

    /// Pointwise value at q.
    Quat operator()(const Quat& q) const {
        if (is_zero()) return Quat();
        if (min_degree_ < 0 && q.is_zero(0.0)) throw Error(ErrorCode::PoleAtZero, "negative powers evaluated at 0");
        Quat acc;
        for (int n = degree(); n >= std::max(min_degree_, 0); --n) acc = q * acc + coeff(n);
        if (min_degree_ > 0) {
            for (int n = 0; n < min_degree_; ++n) acc = q * acc;
        }
        if (min_degree_ < 0) {
            Quat inv = q.inverse();
            Quat neg;
            int top = std::min(-1, degree());
            for (int n = min_degree_; n <= top; ++n) neg = inv * neg + coeff(n);
            for (int n = top; n < 0; ++n) neg = inv * neg;
            acc += neg;
        }
        return acc;
    }

    /// Largest coefficient modulus.
    double max_coeff_norm() const {
        double m = 0;
        for (const auto& a : coeffs_) m = std::max(m, a.norm());
        return m;
    }

    /// Drop coefficients with modulus at most tol (float pruning).
    QPoly chopped(double tol) const {
        std::vector<Quat> c(coeffs_);
        for (auto& a : c)
            if (a.norm() <= tol) a = Quat();
        return QPoly(min_degree_, std::move(c));
    }

    friend std::ostream& operator<<(std::ostream& os, const QPoly& f) {
        if (f.is_zero()) return os << "0";
        bool first = true;
        for (int n = f.min_degree_; n <= f.degree(); ++n) {
            Quat a = f.coeff(n);
            if (a.is_zero(0.0)) continue;
            if (!first) os << " + ";
            first = false;
            if (n == 0)
                os << a;
            else
                os << "q^" << n << " " << a;
        }
        return os;
    }

    void require_polynomial(const char* what) const {
        if (!is_polynomial()) throw Error(ErrorCode::NotPolynomial, std::string(what) + " requires no negative powers");
    }

private:
    static QPoly combine(const QPoly& f, const QPoly& g, bool subtract) {
        if (f.is_zero()) return subtract ? -g : g;
        if (g.is_zero()) return f;
        int lo = std::min(f.min_degree_, g.min_degree_);
        int hi = std::max(f.degree(), g.degree());
        std::vector<Quat> c(static_cast<std::size_t>(hi - lo + 1));
        for (int n = f.min_degree_; n <= f.degree(); ++n) c[static_cast<std::size_t>(n - lo)] += f.coeff(n);
        for (int n = g.min_degree_; n <= g.degree(); ++n) {
            if (subtract)
                c[static_cast<std::size_t>(n - lo)] -= g.coeff(n);
            else
                c[static_cast<std::size_t>(n - lo)] += g.coeff(n);
        }
        return QPoly(lo, std::move(c));
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero(0.0)) coeffs_.pop_back();
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead].is_zero(0.0)) ++lead;
        if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
            min_degree_ += static_cast<int>(lead);
        }
        if (coeffs_.empty()) min_degree_ = 0;
    }

    int min_degree_ = 0;
    std::vector<Quat> coeffs_;
};

template <Scalar S>
Quaternion<S> evaluate(const QPoly<S>& f, const Quaternion<S>& q) {
    return f(q);
}

template <Scalar To, Scalar From>
QPoly<To> qpoly_cast(const QPoly<From>& f) {
    std::vector<Quaternion<To>> c;
    c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) c.push_back(quaternion_cast<To>(a));
    return QPoly<To>(f.min_degree(), std::move(c));
}

/// f = (q - q0) * g + r with r = f(q0) a constant.  Requires a polynomial f.
template <Scalar S>
std::pair<QPoly<S>, Quaternion<S>> left_divide_linear(const QPoly<S>& f, const Quaternion<S>& q0) {
    f.require_polynomial("division by (q - q0)");
    int N = f.degree();
    if (N <= 0) return {QPoly<S>{}, f.coeff(0)};
    std::vector<Quaternion<S>> b(static_cast<std::size_t>(N));
    b[static_cast<std::size_t>(N - 1)] = f.coeff(N);
    for (int n = N - 1; n >= 1; --n)
        b[static_cast<std::size_t>(n - 1)] = f.coeff(n) + q0 * b[static_cast<std::size_t>(n)];
    Quaternion<S> r = f.coeff(0) + q0 * b[0];
    return {QPoly<S>(0, std::move(b)), r};
}

/// Componentwise Euclidean division by a real polynomial d:
/// f = d * g + r with deg r < deg d.  Real coefficients commute, so the
/// side of the product does not matter.
template <Scalar S>
std::pair<QPoly<S>, QPoly<S>> divmod_real(const QPoly<S>& f, const RealPoly<S>& d) {
    f.require_polynomial("division by a real polynomial");
    if (d.is_zero()) throw Error(ErrorCode::ZeroFunction, "division by the zero polynomial");
    QPoly<S> quo, rem;
    for (int l = 0; l < 4; ++l) {
        RealPoly<S> part = f.component(l).real_part();
        auto [q, r] = part.divmod(d);
        Quaternion<S> unit = l == 0 ? Quaternion<S>(S(1)) : l == 1 ? Quaternion<S>::i() : l == 2 ? Quaternion<S>::j() : Quaternion<S>::k();
        quo += QPoly<S>::from_real(q) * QPoly<S>(unit);
        rem += QPoly<S>::from_real(r) * QPoly<S>(unit);
    }
    return {quo, rem};
}

/// Largest k with d^k dividing f exactly (rational) or within tol (float).
template <Scalar S>
int real_factor_multiplicity(QPoly<S> f, const RealPoly<S>& d, double tol = 1e-9) {
    if (f.is_zero() || d.degree() <= 0) return 0;
    int k = 0;
    for (;;) {
        auto [q, r] = divmod_real(f, d);
        bool zero;
        if constexpr (is_exact_v<S>) {
            (void)tol;
            zero = r.is_zero();
        } else {
            zero = r.max_coeff_norm() <= tol * std::max(1.0, f.max_coeff_norm());
        }
        if (!zero || q.is_zero()) return k;
        ++k;
        f = q;
    }
}

}  // namespace srkit

#endif  // SRKIT_QPOLY_HPP
