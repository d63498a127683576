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

#ifndef SRKIT_SCALAR_HPP
#define SRKIT_SCALAR_HPP

/**
 * @file scalar.hpp
 * @brief Scalar backends.
 *
 * Every algebraic object in srkit is parameterised by a scalar type.  Two
 * backends are supported:
 *
 *   - Rational (GMP mpq_class): exact arithmetic, used wherever identities
 *     must hold with zero residual.
 *   - double / long double: used for transcendental operations (exp, log,
 *     square roots, root finding).
 *
 * ScalarTraits<S> collects the handful of operations the generic code needs
 * and that the two families spell differently.
 */

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace srkit {

using Rational = mpq_class;

template <class S>
struct ScalarTraits;

template <std::floating_point F>
struct ScalarTraits<F> {
    static constexpr bool exact = false;
    /// Default absolute tolerance for "is this zero" questions.
    static constexpr F default_tolerance = static_cast<F>(1e-12);

    static F from_int(long v) { return static_cast<F>(v); }
    static F from_double(double v) { return static_cast<F>(v); }
    static double to_double(const F& v) { return static_cast<double>(v); }
    static F abs(const F& v) { return std::fabs(v); }
    static bool is_zero(const F& v, double tol = default_tolerance) { return std::fabs(v) <= tol; }
    static int sign(const F& v) { return (v > 0) - (v < 0); }
    /// Square root; always available for floats.
    static std::optional<F> exact_sqrt(const F& v) {
        if (v < 0) return std::nullopt;
        return std::sqrt(v);
    }
    static F sqrt_approx(const F& v) { return std::sqrt(v); }
    static std::string to_string(const F& v) {
        std::ostringstream os;
        os.precision(17);
        os << v;
        return os.str();
    }
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr double default_tolerance = 0.0;

    static Rational from_int(long v) { return Rational(v); }
    /// Exact conversion: every finite double is a dyadic rational.
    static Rational from_double(double v) {
        if (!std::isfinite(v)) throw std::domain_error("non-finite value has no rational form");
        return Rational(v);
    }
    static double to_double(const Rational& v) { return v.get_d(); }
    static Rational abs(const Rational& v) { return ::abs(v); }
    static bool is_zero(const Rational& v, double = 0.0) { return sgn(v) == 0; }
    static int sign(const Rational& v) { return sgn(v); }
    /// Square root when the value is the square of a rational, nullopt otherwise.
    static std::optional<Rational> exact_sqrt(const Rational& v) {
        if (sgn(v) < 0) return std::nullopt;
        if (sgn(v) == 0) return Rational(0);
        mpz_class num = v.get_num();
        mpz_class den = v.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
            return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        Rational r(rn, rd);
        r.canonicalize();
        return r;
    }
    /// Nearest double square root, converted back exactly.
    static Rational sqrt_approx(const Rational& v) {
        if (auto e = exact_sqrt(v)) return *e;
        return Rational(std::sqrt(v.get_d()));
    }
    static std::string to_string(const Rational& v) { return v.get_str(); }
};

template <class S>
concept Scalar = requires { ScalarTraits<S>::exact; };

template <class S>
inline constexpr bool is_exact_v = ScalarTraits<S>::exact;

/// Parse a scalar from text: integers, fractions "p/q", and decimals "1.25".
/// Decimals are read exactly under the rational backend (0.1 -> 1/10).
template <Scalar S>
S parse_scalar(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty scalar");
    if constexpr (is_exact_v<S>) {
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            Rational r;
            if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
            if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
            r.canonicalize();
            return r;
        }
        std::string mant = text;
        long exp10 = 0;
        auto e = mant.find_first_of("eE");
        if (e != std::string::npos) {
            try {
                exp10 = std::stol(mant.substr(e + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad exponent in '" + text + "'");
            }
            mant = mant.substr(0, e);
        }
        auto dot = mant.find('.');
        if (dot != std::string::npos) {
            exp10 -= static_cast<long>(mant.size() - dot - 1);
            mant.erase(dot, 1);
        }
        if (mant.empty() || mant == "-" || mant == "+") throw std::invalid_argument("bad scalar '" + text + "'");
        if (mant[0] == '+') mant.erase(0, 1);
        mpz_class m;
        if (m.set_str(mant, 10) != 0) throw std::invalid_argument("bad scalar '" + text + "'");
        mpz_class p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
        Rational r = exp10 < 0 ? Rational(m, p10) : Rational(m * p10);
        r.canonicalize();
        return r;
    } else {
        auto slash = text.find('/');
        try {
            if (slash != std::string::npos)
                return static_cast<S>(std::stold(text.substr(0, slash)) / std::stold(text.substr(slash + 1)));
            std::size_t used = 0;
            S v = static_cast<S>(std::stold(text, &used));
            if (used != text.size()) throw std::invalid_argument("trailing characters");
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad scalar '" + text + "'");
        }
    }
}

/// Conversion between backends.  Float -> rational is exact.
template <Scalar To, Scalar From>
To scalar_cast(const From& v) {
    if constexpr (std::is_same_v<To, From>) {
        return v;
    } else if constexpr (is_exact_v<To>) {
        return ScalarTraits<To>::from_double(static_cast<double>(v));
    } else if constexpr (is_exact_v<From>) {
        return static_cast<To>(v.get_d());
    } else {
        return static_cast<To>(v);
    }
}

}  // namespace srkit

#endif  // SRKIT_SCALAR_HPP
