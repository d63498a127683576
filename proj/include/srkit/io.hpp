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

#ifndef SRKIT_IO_HPP
#define SRKIT_IO_HPP

/**
 * @file io.hpp
 * @brief JSON encodings of srkit values.
 *
 *   scalar      "3/2" (exact) or 1.5 (float); input accepts either form
 *   Quaternion  [w, x, y, z], or a bare scalar for a real value
 *   QPoly       {"min_degree": m, "coeffs": [[w,x,y,z], ...]}
 *   Node        {"type": "real", "x": ..} | {"type": "point", "q": [..]}
 *               | {"type": "sphere", "a": .., "r": ..} ("r2" accepted)
 *
 * Malformed input raises Error(MalformedInput).
 */

#include <json.hpp>

#include <string>

#include "cousin.hpp"
#include "jets.hpp"
#include "zeros.hpp"

namespace srkit::io {

using json = nlohmann::json;

[[noreturn]] inline void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <Scalar S>
S scalar_from(const json& j) {
    try {
        if (j.is_string()) return parse_scalar<S>(j.get<std::string>());
        if (j.is_number_integer()) return parse_scalar<S>(j.dump());
        if (j.is_number_float()) {
            if constexpr (is_exact_v<S>) return parse_scalar<S>(j.dump());
            else return static_cast<S>(j.get<double>());
        }
    } catch (const std::invalid_argument& e) {
        malformed(e.what());
    }
    malformed("expected a number or numeric string, got " + j.dump());
}

template <Scalar S>
json scalar_to(const S& v) {
    if constexpr (is_exact_v<S>) {
        return v.get_str();
    } else {
        return static_cast<double>(v);
    }
}

template <Scalar S>
Quaternion<S> quat_from(const json& j) {
    if (j.is_array()) {
        if (j.size() != 4) malformed("quaternion needs 4 components");
        return {scalar_from<S>(j[0]), scalar_from<S>(j[1]), scalar_from<S>(j[2]), scalar_from<S>(j[3])};
    }
    return Quaternion<S>(scalar_from<S>(j));
}

template <Scalar S>
json quat_to(const Quaternion<S>& q) {
    return json::array({scalar_to(q.w), scalar_to(q.x), scalar_to(q.y), scalar_to(q.z)});
}

template <Scalar S>
QPoly<S> qpoly_from(const json& j) {
    if (j.is_array()) {
        std::vector<Quaternion<S>> c;
        for (const auto& e : j) c.push_back(quat_from<S>(e));
        return QPoly<S>(0, std::move(c));
    }
    if (!j.is_object()) return QPoly<S>(quat_from<S>(j));
    int m = 0;
    if (j.contains("min_degree")) {
        if (!j["min_degree"].is_number_integer()) malformed("min_degree must be an integer");
        m = j["min_degree"].get<int>();
    }
    const json& cs = field(j, "coeffs");
    if (!cs.is_array()) malformed("coeffs must be an array");
    std::vector<Quaternion<S>> c;
    for (const auto& e : cs) c.push_back(quat_from<S>(e));
    return QPoly<S>(m, std::move(c));
}

template <Scalar S>
json qpoly_to(const QPoly<S>& f) {
    json c = json::array();
    for (const auto& a : f.coeffs()) c.push_back(quat_to(a));
    return {{"min_degree", f.min_degree()}, {"coeffs", c}};
}

template <Scalar S>
json sphere_to(const Sphere<S>& s) {
    json out = {{"a", scalar_to(s.a)}, {"r2", scalar_to(s.r2)}};
    if (auto r = s.radius()) out["r"] = scalar_to(*r);
    else out["r"] = s.radius_approx();
    return out;
}

template <Scalar S>
Sphere<S> sphere_from(const json& j) {
    S a = scalar_from<S>(field(j, "a"));
    if (j.contains("r2")) return Sphere<S>(a, scalar_from<S>(j["r2"]));
    S r = scalar_from<S>(field(j, "r"));
    if (ScalarTraits<S>::sign(r) < 0) malformed("sphere radius must be nonnegative");
    return Sphere<S>::from_radius(a, r);
}

template <Scalar S>
Node<S> node_from(const json& j) {
    const json& t = field(j, "type");
    if (!t.is_string()) malformed("node type must be a string");
    std::string type = t.get<std::string>();
    if (type == "real") return Node<S>::real(scalar_from<S>(field(j, "x")));
    if (type == "point") return Node<S>::point(quat_from<S>(field(j, "q")));
    if (type == "sphere") return Node<S>::on_sphere(sphere_from<S>(j));
    malformed("unknown node type '" + type + "'");
}

template <Scalar S>
json node_to(const Node<S>& n) {
    switch (n.kind) {
        case NodeKind::Real: return {{"type", "real"}, {"x", scalar_to(n.q.w)}};
        case NodeKind::Point: return {{"type", "point"}, {"q", quat_to(n.q)}};
        case NodeKind::Sphere: {
            json out = sphere_to(n.sphere);
            out["type"] = "sphere";
            return out;
        }
    }
    return {};
}

inline int order_from(const json& j) {
    const json& o = field(j, "order");
    if (!o.is_number_integer()) malformed("order must be an integer");
    return o.get<int>();
}

template <Scalar S>
Divisor<S> divisor_from(const json& j) {
    if (!j.is_array()) malformed("divisor must be an array");
    Divisor<S> out;
    for (const auto& e : j) out.push_back({node_from<S>(field(e, "node")), order_from(e)});
    return out;
}

template <Scalar S>
json divisor_to(const Divisor<S>& d) {
    json out = json::array();
    for (const auto& e : d) out.push_back({{"node", node_to(e.node)}, {"order", e.order}});
    return out;
}

template <Scalar S>
json zeros_to(const std::vector<ZeroRecord<S>>& zs) {
    json out = json::array();
    for (const auto& z : zs) {
        json r = {{"kind", zero_kind_name(z.kind)}, {"multiplicity", z.multiplicity}, {"approximate", z.approximate}};
        if (z.kind == ZeroKind::SphericalZero) r["sphere"] = sphere_to(z.sphere);
        else r["point"] = quat_to(z.point);
        out.push_back(r);
    }
    return out;
}

template <Scalar S>
json semiregular_to(const SemiRegularFn<S>& f) {
    return {{"numerator", qpoly_to(f.numerator())}, {"denominator", qpoly_to(f.denominator())}};
}

template <Scalar S>
SemiRegularFn<S> semiregular_from(const json& j) {
    if (j.is_object() && j.contains("numerator")) {
        QPoly<S> den = j.contains("denominator") ? qpoly_from<S>(j["denominator"]) : QPoly<S>(1);
        return SemiRegularFn<S>(qpoly_from<S>(j["numerator"]), den);
    }
    return SemiRegularFn<S>(qpoly_from<S>(j));
}

template <Scalar S>
JetSpec<S> jetspec_from(const json& j) {
    if (!j.is_array()) malformed("jet spec must be an array");
    JetSpec<S> out;
    for (const auto& e : j) {
        JetNode<S> n;
        n.node = node_from<S>(field(e, "node"));
        const json& jet = field(e, "jet");
        const json& cs = field(jet, "coeffs");
        if (!cs.is_array()) malformed("jet coeffs must be an array");
        for (const auto& c : cs) n.coeffs.push_back(quat_from<S>(c));
        if (jet.contains("anchor") && !jet["anchor"].is_null()) n.anchor = quat_from<S>(jet["anchor"]);
        out.push_back(std::move(n));
    }
    return out;
}

template <Scalar S>
json quats_to(const std::vector<Quaternion<S>>& v) {
    json out = json::array();
    for (const auto& a : v) out.push_back(quat_to(a));
    return out;
}

template <Scalar S>
json matrep_to(const MatRep4<S>& m) {
    json rows = json::array();
    for (int r = 0; r < 4; ++r) {
        json row = json::array();
        for (int c = 0; c < 4; ++c) row.push_back(qpoly_to(m(r, c)));
        rows.push_back(row);
    }
    return {{"entries", rows}};
}

template <Scalar S>
json matrep2_to(const MatRep2<S>& m) {
    return {{"f0", qpoly_to(m.f0)}, {"f1", qpoly_to(m.f1)}, {"v", quat_to(m.v)}};
}

inline AnnularPair pair_from(const json& j) {
    AnnularPair p;
    if (j.is_null()) return p;
    p.r_inner = scalar_from<double>(field(j, "r_inner"));
    p.r_outer = scalar_from<double>(field(j, "r_outer"));
    return p;
}

}  // namespace srkit::io

#endif  // SRKIT_IO_HPP
