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

#ifndef SRKIT_REALPOLY_HPP
#define SRKIT_REALPOLY_HPP

/**
 * @file realpoly.hpp
 * @brief Dense univariate polynomials with real (scalar) coefficients.
 *
 * These carry symmetrizations and denominators: Euclidean division, gcd,
 * square-free decomposition, and numerical root finding through the
 * companion matrix.
 */

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace srkit {

template <Scalar S>
class RealPoly {
public:
    RealPoly() = default;
    explicit RealPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
    RealPoly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

    static RealPoly constant(const S& v) { return RealPoly(std::vector<S>{v}); }
    /// (q - root)
    static RealPoly linear(const S& root) { return RealPoly(std::vector<S>{S(-root), S(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<S>& coeffs() const { return c_; }
    S coeff(int n) const { return (n < 0 || n > degree()) ? S(0) : c_[static_cast<std::size_t>(n)]; }
    const S& leading() const { return c_.back(); }

    S operator()(const S& x) const {
        S acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = S(acc * x + *it);
        return acc;
    }

    friend RealPoly operator+(const RealPoly& a, const RealPoly& b) {
        std::vector<S> out(std::max(a.c_.size(), b.c_.size()), S(0));
        for (std::size_t n = 0; n < a.c_.size(); ++n) out[n] += a.c_[n];
        for (std::size_t n = 0; n < b.c_.size(); ++n) out[n] += b.c_[n];
        return RealPoly(std::move(out));
    }
    friend RealPoly operator-(const RealPoly& a, const RealPoly& b) {
        std::vector<S> out(std::max(a.c_.size(), b.c_.size()), S(0));
        for (std::size_t n = 0; n < a.c_.size(); ++n) out[n] += a.c_[n];
        for (std::size_t n = 0; n < b.c_.size(); ++n) out[n] -= b.c_[n];
        return RealPoly(std::move(out));
    }
    friend RealPoly operator*(const RealPoly& a, const RealPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<S> out(a.c_.size() + b.c_.size() - 1, S(0));
        for (std::size_t n = 0; n < a.c_.size(); ++n)
            for (std::size_t m = 0; m < b.c_.size(); ++m) out[n + m] += a.c_[n] * b.c_[m];
        return RealPoly(std::move(out));
    }
    friend RealPoly operator*(const S& s, const RealPoly& a) {
        std::vector<S> out(a.c_);
        for (auto& v : out) v *= s;
        return RealPoly(std::move(out));
    }
    friend bool operator==(const RealPoly& a, const RealPoly& b) { return a.c_ == b.c_; }

    RealPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<S> out(c_.size() - 1);
        for (std::size_t n = 1; n < c_.size(); ++n) out[n - 1] = S(c_[n] * S(static_cast<long>(n)));
        return RealPoly(std::move(out));
    }

    RealPoly monic() const {
        if (is_zero()) return {};
        S lead = leading();
        std::vector<S> out(c_);
        for (auto& v : out) v /= lead;
        return RealPoly(std::move(out));
    }

    RealPoly pow(int e) const {
        RealPoly out = constant(S(1));
        for (int n = 0; n < e; ++n) out = out * *this;
        return out;
    }

    /// Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<RealPoly, RealPoly> divmod(const RealPoly& d) const {
        if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
        std::vector<S> rem(c_);
        if (degree() < d.degree()) return {RealPoly{}, *this};
        std::vector<S> quo(static_cast<std::size_t>(degree() - d.degree() + 1), S(0));
        const S& lead = d.leading();
        for (int n = degree(); n >= d.degree(); --n) {
            S coef = S(rem[static_cast<std::size_t>(n)] / lead);
            quo[static_cast<std::size_t>(n - d.degree())] = coef;
            for (int m = 0; m <= d.degree(); ++m)
                rem[static_cast<std::size_t>(n - d.degree() + m)] -= coef * d.c_[static_cast<std::size_t>(m)];
            rem[static_cast<std::size_t>(n)] = S(0);
        }
        rem.resize(static_cast<std::size_t>(std::max(d.degree(), 0)));
        return {RealPoly(std::move(quo)), RealPoly(std::move(rem))};
    }

    /// Largest absolute coefficient.
    double max_abs() const {
        double m = 0;
        for (const auto& v : c_) m = std::max(m, std::fabs(ScalarTraits<S>::to_double(v)));
        return m;
    }

    /// Drop trailing coefficients whose magnitude is at most tol * max_abs().
    RealPoly chopped(double tol) const {
        double scale = max_abs();
        std::vector<S> out(c_);
        while (!out.empty() && std::fabs(ScalarTraits<S>::to_double(out.back())) <= tol * scale) out.pop_back();
        return RealPoly(std::move(out));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
    }

    std::vector<S> c_;
};

/// Monic gcd.  Exact under the rational backend; under floats, remainders
/// below `tol` relative to the divisor are treated as zero.
template <Scalar S>
RealPoly<S> gcd(RealPoly<S> a, RealPoly<S> b, double tol = 1e-10) {
    while (!b.is_zero()) {
        RealPoly<S> r = a.divmod(b).second;
        if constexpr (!is_exact_v<S>) {
            if (r.max_abs() <= tol * std::max(1.0, b.max_abs())) r = RealPoly<S>{};
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// True when d divides p exactly (rational) or with remainder below tol (float).
template <Scalar S>
bool divides(const RealPoly<S>& d, const RealPoly<S>& p, double tol = 1e-10) {
    RealPoly<S> r = p.divmod(d).second;
    if constexpr (is_exact_v<S>) {
        (void)tol;
        return r.is_zero();
    } else {
        return r.max_abs() <= tol * std::max(1.0, p.max_abs());
    }
}

/// Yun's square-free decomposition: returns factors[k-1] = product of the
/// irreducible factors of multiplicity exactly k (monic, possibly constant 1).
template <Scalar S>
std::vector<RealPoly<S>> square_free_decomposition(const RealPoly<S>& p) {
    static_assert(is_exact_v<S>, "square-free decomposition needs exact arithmetic");
    std::vector<RealPoly<S>> out;
    if (p.degree() <= 0) return out;
    RealPoly<S> f = p.monic();
    RealPoly<S> fp = f.derivative();
    RealPoly<S> a = gcd(f, fp);
    RealPoly<S> b = f.divmod(a).first;
    RealPoly<S> c = fp.divmod(a).first;
    RealPoly<S> d = c - b.derivative();
    while (b.degree() > 0) {
        RealPoly<S> g = gcd(b, d);
        out.push_back(g);
        b = b.divmod(g).first;
        c = d.divmod(g).first;
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

/// All complex roots (with repetition) from the companion matrix, then a
/// few Newton steps in long double against the original coefficients.
template <Scalar S>
std::vector<std::complex<double>> complex_roots(const RealPoly<S>& p) {
    std::vector<std::complex<double>> roots;
    int n = p.degree();
    if (n <= 0) return roots;
    std::vector<long double> c(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        if constexpr (is_exact_v<S>) {
            // Ratio to the leading coefficient keeps huge integers in range.
            c[static_cast<std::size_t>(k)] =
                static_cast<long double>(Rational(p.coeff(k) / p.leading()).get_d());
        } else {
            c[static_cast<std::size_t>(k)] = static_cast<long double>(p.coeff(k)) / p.leading();
        }
    }
    if (n == 1) {
        roots.emplace_back(static_cast<double>(-c[0]), 0.0);
        return roots;
    }
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) comp(k, k - 1) = 1.0;
    for (int k = 0; k < n; ++k) comp(k, n - 1) = -static_cast<double>(c[static_cast<std::size_t>(k)]);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
    auto ev = solver.eigenvalues();
    for (int k = 0; k < n; ++k) {
        std::complex<long double> z(ev(k).real(), ev(k).imag());
        for (int it = 0; it < 4; ++it) {
            std::complex<long double> val = 0, der = 0;
            for (int m = n; m >= 0; --m) {
                der = der * z + val;
                val = val * z + c[static_cast<std::size_t>(m)];
            }
            if (std::abs(der) == 0.0L) break;
            std::complex<long double> step = val / der;
            if (!(std::abs(step) < 1e-3L * (1.0L + std::abs(z)))) break;
            z -= step;
        }
        roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    }
    return roots;
}

/// Successive continued-fraction convergents of x whose distance to x is
/// below `tol`; used to recover exact rationals from numerical roots.
inline std::vector<Rational> rational_candidates(double x, double tol = 1e-7, int max_terms = 40) {
    std::vector<Rational> out;
    if (!std::isfinite(x)) return out;
    mpz_class h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
    long double rest = x;
    for (int t = 0; t < max_terms; ++t) {
        long double fl = std::floor(rest);
        mpz_class a(static_cast<double>(fl));
        mpz_class h = a * h_prev + h_prev2;
        mpz_class k = a * k_prev + k_prev2;
        Rational conv(h, k);
        conv.canonicalize();
        if (std::fabs(conv.get_d() - x) <= tol * std::max(1.0, std::fabs(x))) out.push_back(conv);
        if (k > mpz_class("1000000000000")) break;
        long double frac = rest - fl;
        if (frac < 1e-18L) break;
        rest = 1.0L / frac;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
    }
    return out;
}

}  // namespace srkit

#endif  // SRKIT_REALPOLY_HPP
