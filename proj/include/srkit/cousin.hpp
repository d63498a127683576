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

#ifndef SRKIT_COUSIN_HPP
#define SRKIT_COUSIN_HPP

/**
 * @file cousin.hpp
 * @brief Additive and multiplicative splitting over concentric annuli.
 *
 * For 0 < r_inner < r_outer, A = {|q| >= r_inner}, B = {|q| <= r_outer}
 * and C = A cap B.  A Laurent polynomial on C splits as alpha + beta with
 * alpha built from negative powers (regular on A, vanishing at infinity)
 * and beta from the remaining powers (regular on B).  Multiplicative
 * splits c = a * b follow either the logarithm (slice-preserving c) or an
 * iterated product of additive corrections (general c near 1).
 */

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "matrep.hpp"

namespace srkit {

struct AnnularPair {
    double r_inner = 0.5;
    double r_outer = 2.0;

    void validate() const {
        if (!(r_inner > 0 && r_inner < r_outer && std::isfinite(r_outer)))
            throw Error(ErrorCode::InvalidSpec, "annulus needs 0 < r_inner < r_outer");
    }
};

/// Deterministic sample points on the sphere |q| = r: `count` slices from a
/// Fibonacci lattice of units, angles spread over (0, pi), plus the two real points.
inline std::vector<Quaternion<double>> radius_samples(double r, int count) {
    std::vector<Quaternion<double>> out;
    out.reserve(static_cast<std::size_t>(count) + 2);
    out.emplace_back(r);
    out.emplace_back(-r);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < count; ++k) {
        double zc = 1.0 - 2.0 * (k + 0.5) / count;
        double rho = std::sqrt(std::max(0.0, 1.0 - zc * zc));
        double phi = golden * k;
        Quaternion<double> unit(0.0, rho * std::cos(phi), rho * std::sin(phi), zc);
        double theta = std::numbers::pi * (k + 0.5) / count;
        out.push_back(Quaternion<double>(r * std::cos(theta)) + unit * (r * std::sin(theta)));
    }
    return out;
}

/// 200 samples on the boundary of C, split between the two radii.
inline std::vector<Quaternion<double>> annulus_samples(const AnnularPair& p, int total = 200) {
    auto in = radius_samples(p.r_inner, total / 2 - 2);
    auto out = radius_samples(p.r_outer, total / 2 - 2);
    in.insert(in.end(), out.begin(), out.end());
    return in;
}

template <Scalar S>
double sampled_sup(const QPoly<S>& f, const std::vector<Quaternion<double>>& pts) {
    QPoly<double> fd = qpoly_cast<double>(f);
    double m = 0;
    for (const auto& q : pts) m = std::max(m, fd(q).norm());
    return m;
}

/// sum_n |a_n| max(r_inner^n, r_outer^n), an upper bound for |f| on C.
template <Scalar S>
double annulus_norm(const QPoly<S>& f, const AnnularPair& p) {
    double s = 0;
    for (int n = f.min_degree(); n <= f.degree(); ++n)
        s += f.coeff(n).norm() * std::max(std::pow(p.r_inner, n), std::pow(p.r_outer, n));
    return s;
}

template <Scalar S>
struct SplitResult {
    QPoly<S> alpha;
    QPoly<S> beta;
    /// Measured sup_A |alpha| / sup_C |gamma| over the boundary samples.
    double d_constant = 0;
    /// Bound from Cauchy estimates: sqrt(2) times the number of negative powers.
    double d_bound = 0;
    double alpha_sup = 0;
    double gamma_sup = 0;
};

template <Scalar S>
SplitResult<S> additive_split(const QPoly<S>& gamma, const AnnularPair& pair) {
    pair.validate();
    SplitResult<S> out;
    out.alpha = gamma.slice(gamma.min_degree(), -1);
    out.beta = gamma.slice(0, gamma.degree());
    if (gamma.is_zero()) return out;
    auto samples = annulus_samples(pair);
    out.gamma_sup = sampled_sup(gamma, samples);
    out.alpha_sup = sampled_sup(out.alpha, radius_samples(pair.r_inner, 198));
    out.d_constant = out.gamma_sup > 0 ? out.alpha_sup / out.gamma_sup : 0.0;
    int negatives = 0;
    for (int n = gamma.min_degree(); n < 0; ++n)
        if (!gamma.coeff(n).is_zero(0.0)) ++negatives;
    out.d_bound = std::sqrt(2.0) * negatives;
    return out;
}

struct MultiplicativeSplit {
    QPoly<double> a;
    QPoly<double> b;
    /// max |a * b - c| (or |b * a - c| for the swapped order) at C samples.
    double residual = 0;
    /// max |a - 1| at samples of the boundary of A.
    double a_deviation = 0;
    int iterations = 0;
    bool b_first = false;
    std::vector<double> history;
};

struct SplitOptions {
    double rho = 0.125;
    double target = 1e-10;
    int max_iterations = 200;
    int stall_rounds = 5;
    bool b_first = false;
};

namespace detail {

inline SeriesOptions annulus_series(const AnnularPair& p) {
    SeriesOptions o;
    o.r_inner = p.r_inner;
    o.r_outer = p.r_outer;
    o.term_tol = 1e-17;
    o.prune = 1e-20;
    return o;
}

/// (1 + x)^{-*} by the Neumann series, for small x.
inline QPoly<double> neumann_inverse(const QPoly<double>& x, const AnnularPair& p) {
    SeriesOptions o = annulus_series(p);
    LQ xl = qpoly_cast<long double>(x);
    LQ sum(1), term(1);
    for (int n = 1; n <= o.max_terms; ++n) {
        term = prune(-(term * xl), o);
        sum += term;
        if (weighted_norm(term, p.r_inner, p.r_outer) < o.term_tol) return qpoly_cast<double>(sum);
    }
    throw Error(ErrorCode::OutsideConvergence, "Neumann series did not settle");
}

inline QPoly<double> prune_small(const QPoly<double>& f, const AnnularPair& p, double tol = 1e-20) {
    std::vector<Quaternion<double>> c;
    for (int n = f.min_degree(); n <= f.degree(); ++n) {
        Quaternion<double> a = f.coeff(n);
        if (a.norm() * std::max(std::pow(p.r_inner, n), std::pow(p.r_outer, n)) < tol) a = {};
        c.push_back(a);
    }
    return QPoly<double>(f.min_degree(), std::move(c));
}

inline void finish_split(MultiplicativeSplit& out, const QPoly<double>& c, const AnnularPair& pair, double eps) {
    QPoly<double> prod = out.b_first ? out.b * out.a : out.a * out.b;
    out.residual = sampled_sup(prod - c, annulus_samples(pair));
    out.a_deviation = sampled_sup(out.a - QPoly<double>(1), radius_samples(pair.r_inner, 198));
    if (!(out.a_deviation < eps))
        throw Error(ErrorCode::EpsilonUnattainable,
                    "|a - 1| on A is " + std::to_string(out.a_deviation) + ", requested below " + std::to_string(eps));
}

}  // namespace detail

/// c = a b for slice-preserving c through the logarithm.
inline MultiplicativeSplit multiplicative_split_sp(const QPoly<double>& c, const AnnularPair& pair, double eps) {
    pair.validate();
    if (!c.is_slice_preserving()) throw Error(ErrorCode::NotInClass, "c must have real coefficients");
    auto samples = annulus_samples(pair);
    QPoly<double> cd = c;
    double cmax = sampled_sup(c, samples);
    double cmin = cmax;
    for (const auto& q : samples) cmin = std::min(cmin, c(q).norm());
    if (c.is_zero() || cmin <= 1e-12 * std::max(1.0, cmax)) throw Error(ErrorCode::VanishingOnC, "c vanishes on the annulus");
    double sign = 1.0;
    std::vector<double> real_values;
    for (double r : {pair.r_inner, 0.5 * (pair.r_inner + pair.r_outer), pair.r_outer})
        for (double x : {r, -r}) real_values.push_back(c(Quaternion<double>(x)).w);
    bool pos = std::all_of(real_values.begin(), real_values.end(), [](double v) { return v > 0; });
    bool neg = std::all_of(real_values.begin(), real_values.end(), [](double v) { return v < 0; });
    if (!pos && !neg) throw Error(ErrorCode::VanishingOnC, "c changes sign on the real part of the annulus");
    if (neg) {
        sign = -1.0;
        cd = -c;
    }
    if (!(sampled_sup(cd - QPoly<double>(1), samples) < 1.0))
        throw Error(ErrorCode::OutsideConvergence, "|c - 1| on C must be below 1");
    SeriesOptions o = detail::annulus_series(pair);
    QPoly<double> gamma = detail::log_series(cd, o).value;
    SplitResult<double> parts = additive_split(gamma, pair);
    MultiplicativeSplit out;
    out.a = detail::exp_series(parts.alpha, o).value;
    out.b = sign * detail::exp_series(parts.beta, o).value;
    out.iterations = 1;
    detail::finish_split(out, c, pair, eps);
    return out;
}

/// c = a * b (or b * a) for general c with |c - 1| < rho on C, by the
/// iterated scheme F <- (1 + alpha)^{-*} * F * (1 + beta)^{-*}.
inline MultiplicativeSplit multiplicative_split_general(const QPoly<double>& c, const AnnularPair& pair, double eps,
                                                        const SplitOptions& opt = {}) {
    pair.validate();
    auto samples = annulus_samples(pair);
    double dev = sampled_sup(c - QPoly<double>(1), samples);
    if (!(dev < opt.rho))
        throw Error(ErrorCode::OutsideConvergence,
                    "|c - 1| on C is " + std::to_string(dev) + ", needs < " + std::to_string(opt.rho));
    MultiplicativeSplit out;
    out.b_first = opt.b_first;
    std::vector<QPoly<double>> left, right;
    QPoly<double> F = c;
    double best = std::numeric_limits<double>::infinity();
    int stalled = 0;
    for (int it = 0;; ++it) {
        QPoly<double> G = F - QPoly<double>(1);
        double res = annulus_norm(G, pair);
        out.history.push_back(res);
        if (res < opt.target) break;
        if (it >= opt.max_iterations) throw Error(ErrorCode::OutsideConvergence, "iteration cap reached");
        if (res >= best) {
            if (++stalled >= opt.stall_rounds) throw Error(ErrorCode::OutsideConvergence, "iteration stalled");
        } else {
            stalled = 0;
            best = res;
        }
        SplitResult<double> parts = additive_split(G, pair);
        // A-first: outer factors on the left; B-first: inner factors on the left.
        const QPoly<double>& l = opt.b_first ? parts.beta : parts.alpha;
        const QPoly<double>& r = opt.b_first ? parts.alpha : parts.beta;
        F = detail::prune_small(detail::neumann_inverse(l, pair) * F * detail::neumann_inverse(r, pair), pair);
        left.push_back(QPoly<double>(1) + l);
        right.push_back(QPoly<double>(1) + r);
        out.iterations = it + 1;
    }
    QPoly<double> lp(1), rp(1);
    for (const auto& f : left) lp = detail::prune_small(lp * f, pair);
    for (const auto& f : right) rp = detail::prune_small(f * rp, pair);
    out.a = opt.b_first ? rp : lp;
    out.b = opt.b_first ? lp : rp;
    detail::finish_split(out, c, pair, eps);
    return out;
}

enum class GlueMode { Additive, Multiplicative };

template <Scalar S>
struct Transition {
    int from = 0;
    int to = 1;
    QPoly<S> value;
};

/// Overlap annulus between regions n and n+1 of the default chain.
inline AnnularPair chain_overlap(int n) {
    double r = std::ldexp(1.0, -n);
    return {0.9 * r, 1.1 * r};
}

template <Scalar S>
struct GlueResult {
    std::vector<QPoly<S>> parts;
    /// Largest mismatch over overlap samples.
    double residual = 0;
};

namespace detail {

/// Transitions normalized to v_{n,n+1}, n = 0..N-1.
template <Scalar S>
std::vector<QPoly<S>> chain_links(const std::vector<Transition<S>>& data, GlueMode mode) {
    int top = 0;
    for (const auto& t : data) {
        if (t.from < 0 || t.to < 0 || std::abs(t.from - t.to) != 1)
            throw Error(ErrorCode::IncompatibleChain, "transitions must join consecutive regions");
        top = std::max(top, std::max(t.from, t.to));
    }
    std::vector<std::optional<QPoly<S>>> links(static_cast<std::size_t>(top));
    for (const auto& t : data) {
        int n = std::min(t.from, t.to);
        QPoly<S> v = t.value;
        if (t.from > t.to) {
            if constexpr (is_exact_v<S>) {
                if (mode == GlueMode::Multiplicative)
                    throw Error(ErrorCode::InvalidSpec, "multiplicative gluing runs in floating point");
                v = -v;
            } else {
                v = mode == GlueMode::Additive ? -v : neumann_inverse(v - QPoly<double>(1), chain_overlap(n));
            }
        }
        auto& slot = links[static_cast<std::size_t>(n)];
        if (slot) {
            bool same;
            if constexpr (is_exact_v<S>) {
                same = *slot == v;
            } else {
                same = annulus_norm(*slot - v, chain_overlap(n)) <= 1e-8;
            }
            if (!same) throw Error(ErrorCode::IncompatibleChain, "transitions (k,l) and (l,k) disagree");
        } else {
            slot = v;
        }
    }
    std::vector<QPoly<S>> out;
    for (std::size_t n = 0; n < links.size(); ++n) {
        if (!links[n]) throw Error(ErrorCode::IncompatibleChain, "missing transition between consecutive regions");
        out.push_back(*links[n]);
    }
    return out;
}

}  // namespace detail

/// Per-region functions with v_k - v_{k+1} = v_{k,k+1} (additive) or
/// v_{k+1} * v_k^{-*} = v_{k,k+1} (multiplicative), regions ordered outer to inner.
template <Scalar S>
GlueResult<S> glue_chain(const std::vector<Transition<S>>& data, GlueMode mode, double eps = 0.5) {
    auto links = detail::chain_links(data, mode);
    GlueResult<S> out;
    if (mode == GlueMode::Additive) {
        out.parts.assign(links.size() + 1, QPoly<S>());
        for (std::size_t n = 0; n < links.size(); ++n) {
            QPoly<S> c = links[n] - out.parts[n];
            SplitResult<S> s = additive_split(c, chain_overlap(static_cast<int>(n)));
            for (std::size_t k = 0; k <= n; ++k) out.parts[k] += s.alpha;
            out.parts[n + 1] = -s.beta;
        }
        for (std::size_t n = 0; n < links.size(); ++n) {
            QPoly<S> diff = out.parts[n] - out.parts[n + 1] - links[n];
            out.residual = std::max(out.residual, sampled_sup(diff, annulus_samples(chain_overlap(static_cast<int>(n)))));
        }
        return out;
    } else if constexpr (is_exact_v<S>) {
        throw Error(ErrorCode::InvalidSpec, "multiplicative gluing runs in floating point");
    } else {
        out.parts.assign(links.size() + 1, QPoly<double>(1));
        SplitOptions opt;
        opt.b_first = true;
        for (std::size_t n = 0; n < links.size(); ++n) {
            AnnularPair pair = chain_overlap(static_cast<int>(n));
            QPoly<double> c = links[n] * out.parts[n];
            MultiplicativeSplit s = multiplicative_split_general(c, pair, eps, opt);
            QPoly<double> a_inv = detail::neumann_inverse(s.a - QPoly<double>(1), pair);
            for (std::size_t k = 0; k <= n; ++k) out.parts[k] = detail::prune_small(out.parts[k] * a_inv, pair);
            out.parts[n + 1] = s.b;
        }
        for (std::size_t n = 0; n < links.size(); ++n) {
            AnnularPair pair = chain_overlap(static_cast<int>(n));
            // v_{n+1} * v_n^{-*} = link  <=>  v_{n+1} = link * v_n
            QPoly<double> diff = out.parts[n + 1] - links[n] * out.parts[n];
            out.residual = std::max(out.residual, sampled_sup(diff, annulus_samples(pair)));
        }
        return out;
    }
}

}  // namespace srkit

#endif  // SRKIT_COUSIN_HPP
