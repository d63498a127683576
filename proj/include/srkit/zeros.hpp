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

#ifndef SRKIT_ZEROS_HPP
#define SRKIT_ZEROS_HPP

/**
 * @file zeros.hpp
 * @brief Zero sets of polynomials, functions with prescribed zeros, and
 * finite divisors realized by semiregular functions.
 *
 * The zeros of f lie on the real roots and the spheres of the real
 * polynomial f^s.  For a sphere with characteristic quadratic Q of
 * multiplicity k in f^s, let Q^m be the largest power dividing f.  The
 * sphere is a spherical zero of order 2m, and when k > 2m the quotient
 * f / Q^m has a single zero on it, the isolated zero, which is reported
 * with multiplicity k - 2m.
 */

#include <algorithm>
#include <complex>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "semiregular.hpp"

namespace srkit {

enum class ZeroKind { RealPoint, IsolatedPoint, SphericalZero };

inline const char* zero_kind_name(ZeroKind k) {
    switch (k) {
        case ZeroKind::RealPoint: return "real";
        case ZeroKind::IsolatedPoint: return "point";
        case ZeroKind::SphericalZero: return "sphere";
    }
    return "?";
}

template <Scalar S>
struct ZeroRecord {
    ZeroKind kind = ZeroKind::RealPoint;
    /// Location for point kinds (real for RealPoint).
    Quaternion<S> point;
    /// The sphere carrying the zero (degenerate for RealPoint).
    Sphere<S> sphere;
    int multiplicity = 0;
    /// Location recovered numerically rather than exactly.
    bool approximate = false;
};

enum class NodeKind { Real, Point, Sphere };

/// A prescription site: a real point, a nonreal point, or a sphere.
template <Scalar S>
struct Node {
    NodeKind kind = NodeKind::Real;
    Quaternion<S> q;
    Sphere<S> sphere;

    static Node real(const S& x) { return {NodeKind::Real, Quaternion<S>(x), Sphere<S>(x, S(0))}; }
    static Node point(const Quaternion<S>& q) { return {NodeKind::Point, q, symmetrize_point(q)}; }
    static Node on_sphere(const Sphere<S>& s) { return {NodeKind::Sphere, Quaternion<S>(s.a), s}; }

    /// The symmetrization of the node.
    const Sphere<S>& support() const { return sphere; }

    void validate(double tol = ScalarTraits<S>::default_tolerance) const {
        switch (kind) {
            case NodeKind::Real:
                if (!q.is_real(tol)) throw Error(ErrorCode::InvalidSpec, "real node with imaginary part");
                break;
            case NodeKind::Point:
                if (q.is_real(tol)) throw Error(ErrorCode::InvalidSpec, "point node must be nonreal; use a real node");
                break;
            case NodeKind::Sphere:
                if (ScalarTraits<S>::sign(sphere.r2) <= 0 || sphere.degenerate(tol))
                    throw Error(ErrorCode::InvalidSpec, "sphere radius must be positive");
                break;
        }
    }
};

template <Scalar S>
bool same_node(const Node<S>& a, const Node<S>& b, double tol = 1e-9) {
    if (a.kind != b.kind) return false;
    if (a.kind == NodeKind::Sphere) return sphere_equal(a.sphere, b.sphere, tol);
    if constexpr (is_exact_v<S>) return a.q == b.q;
    else return qdistance(a.q, b.q) <= tol;
}

template <Scalar S>
struct DivisorEntry {
    Node<S> node;
    int order = 0;
};

template <Scalar S>
using Divisor = std::vector<DivisorEntry<S>>;

template <Scalar S>
bool same_divisor(Divisor<S> a, Divisor<S> b, double tol = 1e-9) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& e : a) {
        bool hit = false;
        for (std::size_t n = 0; n < b.size(); ++n) {
            if (used[n] || b[n].order != e.order || !same_node(e.node, b[n].node, tol)) continue;
            used[n] = hit = true;
            break;
        }
        if (!hit) return false;
    }
    return true;
}

/// Records as a divisor with positive orders (approximate flags dropped).
template <Scalar S>
Divisor<S> as_divisor(const std::vector<ZeroRecord<S>>& zs) {
    Divisor<S> out;
    for (const auto& z : zs) {
        switch (z.kind) {
            case ZeroKind::RealPoint: out.push_back({Node<S>::real(z.point.w), z.multiplicity}); break;
            case ZeroKind::IsolatedPoint: out.push_back({Node<S>::point(z.point), z.multiplicity}); break;
            case ZeroKind::SphericalZero: out.push_back({Node<S>::on_sphere(z.sphere), z.multiplicity}); break;
        }
    }
    return out;
}

namespace detail {

/// One real root or one conjugate pair of f^s with its multiplicity.
template <Scalar S>
struct RootSite {
    bool real = true;
    S x{0};
    /// Monic quadratic q^2 + c1 q + c0 for a conjugate pair.
    RealPoly<S> quadratic;
    int multiplicity = 0;
    bool approximate = false;
};

inline double abs_scale(const std::vector<double>& c, double r) {
    double s = 0, p = 1;
    for (double v : c) {
        s += std::fabs(v) * p;
        p *= r;
    }
    return s;
}

template <Scalar S>
RealPoly<S> quadratic_from(const std::complex<double>& z) {
    return RealPoly<S>({ScalarTraits<S>::from_double(std::norm(z)), ScalarTraits<S>::from_double(-2 * z.real()), S(1)});
}

/// Exact sites: square-free factors, numerical roots, then exact recovery.
inline std::vector<RootSite<Rational>> root_sites(const RealPoly<Rational>& p) {
    std::vector<RootSite<Rational>> out;
    auto factors = square_free_decomposition(p);
    for (std::size_t idx = 0; idx < factors.size(); ++idx) {
        RealPoly<Rational> rest = factors[idx];
        int mult = static_cast<int>(idx) + 1;
        if (rest.degree() <= 0) continue;
        auto roots = complex_roots(rest);
        for (const auto& z : roots) {
            if (rest.degree() <= 0) break;
            double tol_im = 1e-7 * std::max(1.0, std::abs(z));
            if (std::fabs(z.imag()) <= tol_im) {
                bool found = false;
                for (const auto& c : rational_candidates(z.real())) {
                    if (sgn(rest(c)) == 0) {
                        out.push_back({true, c, {}, mult, false});
                        rest = rest.divmod(RealPoly<Rational>::linear(c)).first;
                        found = true;
                        break;
                    }
                }
                if (!found) out.push_back({true, Rational(z.real()), {}, mult, true});
            } else if (z.imag() > 0) {
                bool found = false;
                auto cs = rational_candidates(-2 * z.real());
                auto cp = rational_candidates(std::norm(z));
                for (const auto& s : cs) {
                    for (const auto& pp : cp) {
                        RealPoly<Rational> quad({pp, s, Rational(1)});
                        if (divides(quad, rest)) {
                            out.push_back({false, Rational(0), quad, mult, false});
                            rest = rest.divmod(quad).first;
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
                if (!found) out.push_back({false, Rational(0), quadratic_from<Rational>(z), mult, true});
            }
        }
    }
    return out;
}

/// Float sites: companion roots clustered by proximity, with wider merges
/// accepted when the polynomial is small at the cluster mean.
template <std::floating_point F>
std::vector<RootSite<F>> root_sites(const RealPoly<F>& p) {
    std::vector<RootSite<F>> out;
    auto roots = complex_roots(p);
    std::vector<double> c;
    for (const auto& v : p.coeffs()) c.push_back(static_cast<double>(v / p.leading()));
    auto value_at = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
        return acc;
    };
    std::vector<bool> used(roots.size(), false);
    for (std::size_t n = 0; n < roots.size(); ++n) {
        if (used[n]) continue;
        std::vector<std::size_t> best{n};
        for (double radius : {1e-8, 1e-6, 1e-4, 1e-3, 1e-2}) {
            std::vector<std::size_t> members;
            std::complex<double> mean = 0;
            for (std::size_t m = 0; m < roots.size(); ++m) {
                if (used[m] || std::abs(roots[m] - roots[n]) > radius * std::max(1.0, std::abs(roots[n]))) continue;
                members.push_back(m);
                mean += roots[m];
            }
            mean /= static_cast<double>(members.size());
            bool accept = radius <= 1e-8 ||
                          std::abs(value_at(mean)) <= 1e-9 * abs_scale(c, std::abs(mean));
            if (accept && members.size() >= best.size()) best = members;
        }
        std::complex<double> mean = 0;
        for (auto m : best) {
            used[m] = true;
            mean += roots[m];
        }
        mean /= static_cast<double>(best.size());
        int mult = static_cast<int>(best.size());
        if (std::fabs(mean.imag()) <= 1e-7 * std::max(1.0, std::abs(mean))) {
            out.push_back({true, static_cast<F>(mean.real()), {}, mult, true});
        } else if (mean.imag() > 0) {
            out.push_back({false, F(0), quadratic_from<F>(mean), mult, true});
        }
    }
    return out;
}

/// Largest power of x dividing p, and p with it removed.
template <Scalar S>
std::pair<int, RealPoly<S>> strip_origin(const RealPoly<S>& p) {
    int k = 0;
    while (k < p.degree() && ScalarTraits<S>::is_zero(p.coeff(k), 0.0)) ++k;
    std::vector<S> c(p.coeffs().begin() + k, p.coeffs().end());
    return {k, RealPoly<S>(std::move(c))};
}

/// Zero of the remainder q b + a of f modulo Q: q0 = -a b^{-1}.
template <Scalar S>
std::optional<Quaternion<S>> isolated_zero(const QPoly<S>& f, const RealPoly<S>& quad) {
    QPoly<S> rem = divmod_real(f, quad).second;
    Quaternion<S> a = rem.coeff(0), b = rem.coeff(1);
    if (b.is_zero(ScalarTraits<S>::default_tolerance)) return std::nullopt;
    return -(a * b.inverse());
}

template <Scalar S>
Sphere<S> sphere_of(const RealPoly<S>& quad) {
    S a = S(-quad.coeff(1) / S(2));
    return Sphere<S>(a, S(quad.coeff(0) - a * a));
}

template <Scalar S>
int cmp_scalar(const S& a, const S& b) {
    return (a < b) ? -1 : (b < a) ? 1 : 0;
}

template <Scalar S>
bool record_less(const ZeroRecord<S>& a, const ZeroRecord<S>& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (int c = cmp_scalar(a.sphere.a, b.sphere.a)) return c < 0;
    if (int c = cmp_scalar(a.sphere.r2, b.sphere.r2)) return c < 0;
    if (int c = cmp_scalar(a.point.x, b.point.x)) return c < 0;
    if (int c = cmp_scalar(a.point.y, b.point.y)) return c < 0;
    return cmp_scalar(a.point.z, b.point.z) < 0;
}

}  // namespace detail

/// Classified zeros of a nonzero polynomial, sorted by kind and location.
template <Scalar S>
std::vector<ZeroRecord<S>> zero_set(const QPoly<S>& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroFunction, "the zero function vanishes everywhere");
    f.require_polynomial("zero_set");
    std::vector<ZeroRecord<S>> out;
    auto [origin, core] = detail::strip_origin(symmetrization_real(f));
    if (origin > 0) out.push_back({ZeroKind::RealPoint, Quaternion<S>(S(0)), Sphere<S>(S(0), S(0)), origin / 2, false});
    const double tol = is_exact_v<S> ? 0.0 : 1e-6;
    for (const auto& site : detail::root_sites(core)) {
        if (site.real) {
            int mult = (site.multiplicity + 1) / 2;
            out.push_back({ZeroKind::RealPoint, Quaternion<S>(site.x), Sphere<S>(site.x, S(0)), mult, site.approximate});
            continue;
        }
        Sphere<S> sph = detail::sphere_of(site.quadratic);
        int m = real_factor_multiplicity(f, site.quadratic, tol);
        if (m > 0) {
            ZeroRecord<S> z{ZeroKind::SphericalZero, Quaternion<S>(sph.a), sph, 2 * m, site.approximate};
            out.push_back(z);
        }
        int rest = site.multiplicity - 2 * m;
        if (rest > 0) {
            QPoly<S> reduced = f;
            for (int n = 0; n < m; ++n) reduced = divmod_real(reduced, site.quadratic).first;
            if (auto q0 = detail::isolated_zero(reduced, site.quadratic))
                out.push_back({ZeroKind::IsolatedPoint, *q0, sph, rest, site.approximate});
        }
    }
    std::sort(out.begin(), out.end(), detail::record_less<S>);
    return out;
}

namespace detail {

template <Scalar S>
void check_zero_spec(const Divisor<S>& spec, bool positive_only) {
    for (std::size_t n = 0; n < spec.size(); ++n) {
        const auto& e = spec[n];
        e.node.validate();
        if (e.order == 0) throw Error(ErrorCode::InvalidSpec, "orders must be nonzero");
        if (positive_only && e.order < 0) throw Error(ErrorCode::InvalidSpec, "zero prescriptions need positive orders");
        if (e.node.kind == NodeKind::Sphere && e.order % 2 != 0)
            throw Error(ErrorCode::InvalidSpec, "sphere orders must be even");
        for (std::size_t m = 0; m < n; ++m) {
            const auto& o = spec[m];
            if (same_node(e.node, o.node)) {
                if ((e.order > 0) != (o.order > 0))
                    throw Error(ErrorCode::OverlappingZeroPole, "node listed as both zero and pole");
                throw Error(ErrorCode::InvalidSpec, "repeated node");
            }
            if (e.node.kind == NodeKind::Point && o.node.kind == NodeKind::Point &&
                sphere_equal(e.node.support(), o.node.support()))
                throw Error(ErrorCode::ConflictingNodes, "two nonreal points on one sphere");
        }
    }
}

/// Right factor (q - w)^{*k} placing a zero of order k at z after p.
template <Scalar S>
QPoly<S> place_point(const QPoly<S>& p, const Quaternion<S>& z, int k) {
    Quaternion<S> pz = p(z);
    Quaternion<S> w = pz.inverse() * z * pz;
    QPoly<S> lin = QPoly<S>::linear(w), out(1);
    for (int n = 0; n < k; ++n) out = out * lin;
    return out;
}

}  // namespace detail

/// A polynomial whose zero set is exactly the positive divisor `spec`.
template <Scalar S>
QPoly<S> build_with_zeros(const Divisor<S>& spec) {
    detail::check_zero_spec(spec, true);
    QPoly<S> p(1);
    for (const auto& e : spec)
        if (e.node.kind == NodeKind::Point) p = p * detail::place_point(p, e.node.q, e.order);
    for (const auto& e : spec) {
        if (e.node.kind == NodeKind::Real) {
            p = QPoly<S>::from_real(RealPoly<S>::linear(e.node.q.w).pow(e.order)) * p;
        } else if (e.node.kind == NodeKind::Sphere) {
            auto c = e.node.sphere.characteristic();
            RealPoly<S> quad({c[0], c[1], c[2]});
            p = QPoly<S>::from_real(quad.pow(e.order / 2)) * p;
        }
    }
    return p;
}

/// N * P^{-*} with N carrying the zeros and P the poles of `spec`.
template <Scalar S>
SemiRegularFn<S> divisor_build(const Divisor<S>& spec) {
    detail::check_zero_spec(spec, false);
    Divisor<S> zeros, poles;
    for (const auto& e : spec) (e.order > 0 ? zeros : poles).push_back({e.node, std::abs(e.order)});
    for (const auto& z : zeros)
        for (const auto& p : poles)
            if (sphere_equal(z.node.support(), p.node.support()))
                throw Error(ErrorCode::OverlappingZeroPole, "a zero and a pole share a sphere");
    QPoly<S> num = build_with_zeros(zeros);
    QPoly<S> pol = build_with_zeros(poles);
    SemiRegularFn<S> out(num * regular_conjugate(pol), symmetrization(pol));
    return out.reduced();
}

/// Zero and pole structure of a semiregular function, as a divisor.
template <Scalar S>
Divisor<S> divisor_of(const SemiRegularFn<S>& g) {
    SemiRegularFn<S> f = g.reduced();
    if (f.is_zero()) throw Error(ErrorCode::ZeroFunction, "the zero function has no divisor");
    std::vector<ZeroRecord<S>> zn = zero_set(f.numerator());
    std::vector<ZeroRecord<S>> zd;
    if (f.denominator().degree() > 0) zd = zero_set(f.denominator());
    Divisor<S> out;

    std::vector<S> reals;
    std::vector<Sphere<S>> spheres;
    auto note_sphere = [&](const Sphere<S>& s) {
        for (const auto& t : spheres)
            if (sphere_equal(s, t)) return;
        spheres.push_back(s);
    };
    for (const auto* zs : {&zn, &zd})
        for (const auto& z : *zs) {
            if (z.kind == ZeroKind::RealPoint) {
                bool seen = false;
                for (const auto& x : reals) seen = seen || sphere_equal(Sphere<S>(x, S(0)), Sphere<S>(z.point.w, S(0)));
                if (!seen) reals.push_back(z.point.w);
            } else {
                note_sphere(z.sphere);
            }
        }

    auto real_mult = [&](const std::vector<ZeroRecord<S>>& zs, const S& x) {
        for (const auto& z : zs)
            if (z.kind == ZeroKind::RealPoint && sphere_equal(Sphere<S>(x, S(0)), Sphere<S>(z.point.w, S(0))))
                return z.multiplicity;
        return 0;
    };
    for (const auto& x : reals) {
        int net = real_mult(zn, x) - real_mult(zd, x);
        if (net != 0) out.push_back({Node<S>::real(x), net});
    }

    for (const auto& s : spheres) {
        auto c = s.characteristic();
        RealPoly<S> quad({c[0], c[1], c[2]});
        int e = 0;
        for (const auto& z : zd)
            if (z.kind == ZeroKind::SphericalZero && sphere_equal(z.sphere, s)) e = z.multiplicity / 2;
        int m = 0, kp = 0;
        std::optional<Quaternion<S>> w;
        for (const auto& z : zn) {
            if (!sphere_equal(z.sphere, s)) continue;
            if (z.kind == ZeroKind::SphericalZero) m = z.multiplicity / 2;
            if (z.kind == ZeroKind::IsolatedPoint) {
                kp = z.multiplicity;
                w = z.point;
            }
        }
        if (m >= e) {
            if (m > e) out.push_back({Node<S>::on_sphere(s), 2 * (m - e)});
            if (kp > 0) out.push_back({Node<S>::point(*w), kp});
            continue;
        }
        int n = e - m;
        if (kp > 0) {
            QPoly<S> rest = f.numerator();
            for (int t = 0; t < m; ++t) rest = divmod_real(rest, quad).first;
            auto pole = detail::isolated_zero(regular_conjugate(rest), quad);
            if (pole) out.push_back({Node<S>::point(*pole), -std::min(kp, n)});
        }
        if (kp < n) out.push_back({Node<S>::on_sphere(s), -2 * (n - kp)});
    }
    return out;
}

}  // namespace srkit

#endif  // SRKIT_ZEROS_HPP
