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

#ifndef SRKIT_SEMIREGULAR_HPP
#define SRKIT_SEMIREGULAR_HPP

/**
 * @file semiregular.hpp
 * @brief Quotients N * D^{-*} with a slice-preserving (real-coefficient) denominator.
 *
 * Real-coefficient polynomials are central in the *-algebra, so N * D^{-*}
 * and D^{-*} * N coincide and the pointwise value is D(q)^{-1} N(q).
 */

#include "starpoly.hpp"

namespace srkit {

template <Scalar S>
class SemiRegularFn {
public:
    SemiRegularFn() : num_(), den_(1) {}
    SemiRegularFn(QPoly<S> numerator) : num_(std::move(numerator)), den_(1) { normalize(); }
    SemiRegularFn(QPoly<S> numerator, QPoly<S> denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero()) throw Error(ErrorCode::ZeroFunction, "zero denominator");
        if (!den_.is_slice_preserving(1e-12))
            throw Error(ErrorCode::InvalidSpec, "denominator must have real coefficients");
        den_ = den_.component(0);
        normalize();
    }

    const QPoly<S>& numerator() const { return num_; }
    const QPoly<S>& denominator() const { return den_; }
    RealPoly<S> denominator_real() const { return den_.real_part(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_regular() const { return den_.degree() == 0; }

    /// Pointwise value D(q)^{-1} N(q).
    Quaternion<S> operator()(const Quaternion<S>& q) const {
        Quaternion<S> d = den_(q);
        if (d.is_zero(ScalarTraits<S>::default_tolerance)) throw Error(ErrorCode::PoleAtZero, "evaluation at a pole");
        return d.inverse() * num_(q);
    }

    /// Cancel the real gcd of numerator and denominator and make the
    /// denominator monic.  Exact backend only cancels; floats only rescale.
    SemiRegularFn reduced() const {
        SemiRegularFn out(*this);
        if (num_.is_zero()) {
            out.den_ = QPoly<S>(1);
            return out;
        }
        if constexpr (is_exact_v<S>) {
            RealPoly<S> g = den_.real_part();
            for (int l = 0; l < 4 && g.degree() > 0; ++l) {
                RealPoly<S> part = num_.component(l).real_part();
                if (!part.is_zero()) g = gcd(g, part);
            }
            if (g.degree() > 0) {
                out.num_ = divmod_real(num_, g).first;
                out.den_ = QPoly<S>::from_real(den_.real_part().divmod(g).first);
            }
        }
        S lead = out.den_.coeff(out.den_.degree()).w;
        out.num_ = out.num_ / lead;
        out.den_ = out.den_ / lead;
        return out;
    }

    /// Same function: N1 D2 = N2 D1.
    friend bool equivalent(const SemiRegularFn& f, const SemiRegularFn& g) {
        return f.num_ * g.den_ == g.num_ * f.den_;
    }

private:
    /// Clear negative powers so that both parts are ordinary polynomials.
    void normalize() {
        int lo = 0;
        if (!num_.is_zero()) lo = std::min(lo, num_.min_degree());
        lo = std::min(lo, den_.min_degree());
        if (lo < 0) {
            num_ = num_.shift(-lo);
            den_ = den_.shift(-lo);
        }
    }

    QPoly<S> num_;
    QPoly<S> den_;
};

template <Scalar S>
Quaternion<S> evaluate(const SemiRegularFn<S>& f, const Quaternion<S>& q) {
    return f(q);
}

/// f^{-*} = f^c / f^s, unreduced.
template <Scalar S>
SemiRegularFn<S> star_inverse(const QPoly<S>& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroFunction, "the zero function has no *-inverse");
    return SemiRegularFn<S>(regular_conjugate(f), symmetrization(f));
}

/// (N1 D1^{-*}) * (N2 D2^{-*}) = (N1 * N2) (D1 D2)^{-*}; reduced.
template <Scalar S>
SemiRegularFn<S> semi_mul(const SemiRegularFn<S>& f, const SemiRegularFn<S>& g) {
    return SemiRegularFn<S>(f.numerator() * g.numerator(), f.denominator() * g.denominator()).reduced();
}

}  // namespace srkit

#endif  // SRKIT_SEMIREGULAR_HPP
