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

#ifndef SRKIT_JETS_HPP
#define SRKIT_JETS_HPP

/**
 * @file jets.hpp
 * @brief Taylor and spherical expansions, jets, and interpolation of
 * prescribed jets at finitely many nodes.
 *
 * Taylor:    f = sum_n (q - q0)^{*n} A_n
 * Spherical: f = sum_n s^n (A_{2n} + (q - q0) A_{2n+1}),  s = (q - x0)^2 + y0^2
 *
 * Every jet coefficient is right-linear in the coefficients of f, so
 * interpolation reduces to a linear system with quaternion entries acting
 * from the left.
 */

#include <optional>
#include <vector>

#include "zeros.hpp"

namespace srkit {

template <Scalar S>
struct TaylorJet {
    Quaternion<S> center;
    std::vector<Quaternion<S>> coeffs;
};

template <Scalar S>
struct SphericalJet {
    Sphere<S> sphere;
    std::optional<Quaternion<S>> anchor;
    std::vector<Quaternion<S>> coeffs;

    /// First nonvanishing index, or the jet length when all vanish.
    int first_nonzero() const {
        for (std::size_t n = 0; n < coeffs.size(); ++n)
            if (!coeffs[n].is_zero()) return static_cast<int>(n);
        return static_cast<int>(coeffs.size());
    }
};

/// A_0..A_order by iterated division by (q - q0).
template <Scalar S>
TaylorJet<S> taylor_jet(const QPoly<S>& f, const Quaternion<S>& q0, int order) {
    if (order < 0) throw Error(ErrorCode::InvalidSpec, "jet order must be nonnegative");
    f.require_polynomial("taylor_jet");
    TaylorJet<S> jet{q0, {}};
    QPoly<S> g = f;
    for (int n = 0; n <= order; ++n) {
        auto [quo, rem] = left_divide_linear(g, q0);
        jet.coeffs.push_back(rem);
        g = std::move(quo);
    }
    return jet;
}

template <Scalar S>
SphericalJet<S> spherical_expand(const QPoly<S>& f, const Sphere<S>& sphere, const Quaternion<S>& q0, int order) {
    return spherical_expand(f, sphere, std::optional<Quaternion<S>>(q0), order);
}

/// sum_n (q - q0)^{*n} A_n
template <Scalar S>
QPoly<S> taylor_reexpand(const TaylorJet<S>& jet) {
    QPoly<S> out, power(1), lin = QPoly<S>::linear(jet.center);
    for (const auto& a : jet.coeffs) {
        out += power * QPoly<S>(a);
        power = power * lin;
    }
    return out;
}

template <Scalar S>
RealPoly<S> sphere_quadratic(const Sphere<S>& s) {
    auto c = s.characteristic();
    return RealPoly<S>({c[0], c[1], c[2]});
}

/// A_0..A_{2 order + 1}.  Without an anchor the pair (A_{2n}, A_{2n+1}) is
/// the remainder a + q b itself.
template <Scalar S>
SphericalJet<S> spherical_expand(const QPoly<S>& f, const Sphere<S>& sphere, const std::optional<Quaternion<S>>& q0,
                                 int order, double tol = ScalarTraits<S>::default_tolerance) {
    if (order < 0) throw Error(ErrorCode::InvalidSpec, "jet order must be nonnegative");
    if (sphere.degenerate(tol) || ScalarTraits<S>::sign(sphere.r2) < 0)
        throw Error(ErrorCode::InvalidSpec, "spherical expansion needs a sphere of positive radius");
    if (q0 && !sphere.contains(*q0, tol)) throw Error(ErrorCode::AnchorOffSphere, "anchor is not on the sphere");
    f.require_polynomial("spherical_expand");
    RealPoly<S> quad = sphere_quadratic(sphere);
    SphericalJet<S> jet{sphere, q0, {}};
    QPoly<S> g = f;
    for (int n = 0; n <= order; ++n) {
        auto [quo, rem] = divmod_real(g, quad);
        Quaternion<S> a = rem.coeff(0), b = rem.coeff(1);
        jet.coeffs.push_back(q0 ? a + (*q0) * b : a);
        jet.coeffs.push_back(b);
        g = std::move(quo);
    }
    return jet;
}

/// sum_n s^n (A_{2n} + (q - q0) A_{2n+1}), with q0 = 0 when there is no anchor.
template <Scalar S>
QPoly<S> spherical_reconstruct(const SphericalJet<S>& jet) {
    QPoly<S> s = QPoly<S>::from_real(sphere_quadratic(jet.sphere));
    QPoly<S> lin = QPoly<S>::linear(jet.anchor.value_or(Quaternion<S>()));
    QPoly<S> out, power(1);
    for (std::size_t n = 0; n + 1 < jet.coeffs.size(); n += 2) {
        out += power * (QPoly<S>(jet.coeffs[n]) + lin * QPoly<S>(jet.coeffs[n + 1]));
        power = power * s;
    }
    return out;
}

/// A prescribed jet at one node.  Point and real nodes carry Taylor
/// coefficients A_0..A_l; sphere nodes carry A_0..A_{2l+1} and an optional anchor.
template <Scalar S>
struct JetNode {
    Node<S> node;
    std::vector<Quaternion<S>> coeffs;
    std::optional<Quaternion<S>> anchor;

    int order() const {
        int len = static_cast<int>(coeffs.size());
        return node.kind == NodeKind::Sphere ? len / 2 - 1 : len - 1;
    }
};

template <Scalar S>
using JetSpec = std::vector<JetNode<S>>;

template <Scalar S>
void validate_jet_spec(const JetSpec<S>& spec, double tol = ScalarTraits<S>::default_tolerance) {
    for (std::size_t n = 0; n < spec.size(); ++n) {
        const auto& j = spec[n];
        j.node.validate(tol);
        if (j.coeffs.empty()) throw Error(ErrorCode::InvalidSpec, "empty jet");
        if (j.node.kind == NodeKind::Sphere) {
            if (j.coeffs.size() % 2 != 0) throw Error(ErrorCode::InvalidSpec, "spherical jets have even length");
            if (j.anchor) {
                if (!j.node.sphere.contains(*j.anchor, tol))
                    throw Error(ErrorCode::AnchorOffSphere, "anchor is not on the sphere");
            } else {
                for (std::size_t k = 1; k < j.coeffs.size(); k += 2)
                    if (!j.coeffs[k].is_zero(tol))
                        throw Error(ErrorCode::InvalidSpec, "odd coefficients must vanish without an anchor");
            }
        } else if (j.anchor) {
            throw Error(ErrorCode::InvalidSpec, "anchors belong to sphere nodes");
        }
        for (std::size_t m = 0; m < n; ++m)
            if (sphere_equal(j.node.support(), spec[m].node.support()))
                throw Error(ErrorCode::ConflictingNodes, "two jet nodes on one sphere");
    }
}

/// The jet of f at a node, in the shape of `like`.
template <Scalar S>
std::vector<Quaternion<S>> extract_jet(const QPoly<S>& f, const JetNode<S>& like) {
    if (like.node.kind == NodeKind::Sphere)
        return spherical_expand(f, like.node.sphere, like.anchor, like.order()).coeffs;
    return taylor_jet(f, like.node.q, like.order()).coeffs;
}

namespace detail {

template <Scalar S>
bool negligible(const Quaternion<S>& a, double scale) {
    if constexpr (is_exact_v<S>) {
        (void)scale;
        return a.is_zero(0.0);
    } else {
        return a.norm() <= 1e-10 * std::max(1.0, scale);
    }
}

/// Solves sum_m M[r][m] x_m = t_r for the lowest prefix of columns that is
/// consistent; returns x (trailing unknowns zero) or nullopt.
template <Scalar S>
std::optional<std::vector<Quaternion<S>>> solve_left_system(std::vector<std::vector<Quaternion<S>>> M,
                                                            std::vector<Quaternion<S>> t) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows ? M[0].size() : 0;
    double scale = 0;
    for (const auto& r : M)
        for (const auto& a : r) scale = std::max(scale, a.norm());
    for (const auto& a : t) scale = std::max(scale, a.norm());

    std::vector<int> pivot_row(cols, -1);
    std::vector<bool> used(rows, false);
    auto consistent = [&]() {
        for (std::size_t r = 0; r < rows; ++r)
            if (!used[r] && !negligible(t[r], scale)) return false;
        return true;
    };
    std::optional<std::size_t> last;
    if (consistent()) last = 0;
    for (std::size_t c = 0; c < cols && !last; ++c) {
        std::optional<std::size_t> p;
        double best = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            if (used[r] || negligible(M[r][c], scale)) continue;
            if constexpr (is_exact_v<S>) {
                p = r;
                break;
            } else if (M[r][c].norm() > best) {
                best = M[r][c].norm();
                p = r;
            }
        }
        if (p) {
            used[*p] = true;
            pivot_row[c] = static_cast<int>(*p);
            Quaternion<S> inv = M[*p][c].inverse();
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == *p || used[r]) continue;
                if (M[r][c].is_zero(0.0)) continue;
                Quaternion<S> lambda = M[r][c] * inv;
                for (std::size_t k = c; k < cols; ++k) M[r][k] -= lambda * M[*p][k];
                t[r] -= lambda * t[*p];
                M[r][c] = Quaternion<S>();
            }
        }
        if (consistent()) last = c + 1;
    }
    if (!last) return std::nullopt;
    std::size_t width = std::max<std::size_t>(*last, 1);
    std::vector<Quaternion<S>> x(width);
    for (std::size_t c = width; c-- > 0;) {
        if (c >= cols || pivot_row[c] < 0) continue;
        const auto& row = M[static_cast<std::size_t>(pivot_row[c])];
        Quaternion<S> acc = t[static_cast<std::size_t>(pivot_row[c])];
        for (std::size_t k = c + 1; k < width; ++k) acc -= row[k] * x[k];
        x[c] = row[c].inverse() * acc;
    }
    return x;
}

}  // namespace detail

/// The lowest-degree polynomial whose jets at every node match the spec.
template <Scalar S>
QPoly<S> jet_interpolate(const JetSpec<S>& spec) {
    validate_jet_spec(spec);
    std::size_t K = 0;
    for (const auto& j : spec) K += j.coeffs.size();
    if (K == 0) return {};
    const int D = static_cast<int>(K) - 1;
    std::vector<std::vector<Quaternion<S>>> M;
    std::vector<Quaternion<S>> t;
    for (const auto& j : spec) {
        std::vector<std::vector<Quaternion<S>>> cols;
        for (int m = 0; m <= D; ++m) cols.push_back(extract_jet(QPoly<S>::monomial(m, Quaternion<S>(S(1))), j));
        for (std::size_t r = 0; r < j.coeffs.size(); ++r) {
            std::vector<Quaternion<S>> row;
            for (int m = 0; m <= D; ++m) row.push_back(cols[static_cast<std::size_t>(m)][r]);
            M.push_back(std::move(row));
            t.push_back(j.coeffs[r]);
        }
    }
    auto x = detail::solve_left_system(std::move(M), std::move(t));
    if (!x) throw std::logic_error("jet system inconsistent at full degree");
    return QPoly<S>(0, std::move(*x));
}

/// The local interpolant for a single node.
template <Scalar S>
QPoly<S> hermite_local(const JetNode<S>& node) {
    return jet_interpolate(JetSpec<S>{node});
}

/// A polynomial all of whose jets of the node's order vanish at the node:
/// (q - q0)^{*(l+1)} for points, s^{l+1} for spheres.
template <Scalar S>
QPoly<S> vanishing_factor(const JetNode<S>& node) {
    QPoly<S> base = node.node.kind == NodeKind::Sphere ? QPoly<S>::from_real(sphere_quadratic(node.node.sphere))
                                                       : QPoly<S>::linear(node.node.q);
    QPoly<S> out(1);
    for (int n = 0; n <= node.order(); ++n) out = out * base;
    return out;
}

}  // namespace srkit

#endif  // SRKIT_JETS_HPP
