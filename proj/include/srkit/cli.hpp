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

#ifndef SRKIT_CLI_HPP
#define SRKIT_CLI_HPP

/**
 * @file cli.hpp
 * @brief Request dispatch behind the srkit command-line tool.
 *
 * A request is {"command", "payload", "backend", "tolerances"}; the
 * response is {"status", "result", "diagnostics"} with an "error" object
 * {"code", "message"} on failure.  A JSON array of requests yields an
 * array of responses in the same order.
 */

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "io.hpp"

namespace srkit::cli {

using json = nlohmann::json;

enum class Backend { Exact, Float };

struct Defaults {
    Backend backend = Backend::Exact;
    int trunc = 64;
    /// Overrides the series term tolerance when set.
    std::optional<double> tolerance;
};

struct Response {
    bool ok = true;
    json result;
    std::vector<std::string> diagnostics;
    ErrorCode code = ErrorCode::MalformedInput;
    std::string message;

    /// 0 ok, 1 domain error, 2 malformed input.
    int exit_code() const {
        if (ok) return 0;
        return (code == ErrorCode::MalformedInput || code == ErrorCode::UnknownCommand) ? 2 : 1;
    }

    json to_json() const {
        json out = {{"status", ok ? "ok" : "error"}, {"diagnostics", diagnostics}};
        if (ok) out["result"] = result;
        else out["error"] = {{"code", std::string(error_name(code))}, {"message", message}};
        return out;
    }
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = {
        "eval", "mul",  "conj", "symm", "inv",   "components", "matrep",      "det",       "exp",      "log",
        "zeros", "build-zeros", "divisor", "jet", "sjet", "interpolate", "split-add", "split-mul", "glue"};
    return names;
}

namespace detail {

using io::field;
using io::malformed;

struct Context {
    const json& payload;
    const json& tolerances;
    const Defaults& defaults;
    std::vector<std::string>& diagnostics;

    int trunc() const {
        if (payload.contains("trunc")) {
            if (!payload["trunc"].is_number_integer() || payload["trunc"].get<int>() < 1) malformed("trunc must be a positive integer");
            return payload["trunc"].get<int>();
        }
        return defaults.trunc;
    }

    double tol(const char* key, double fallback) const {
        if (tolerances.is_object() && tolerances.contains(key)) return io::scalar_from<double>(tolerances[key]);
        return fallback;
    }
};

inline SeriesOptions series_options(const Context& ctx) {
    SeriesOptions o;
    o.trunc = ctx.trunc();
    o.term_tol = ctx.tol("series", ctx.defaults.tolerance.value_or(o.term_tol));
    if (ctx.payload.contains("radius")) {
        double r = io::scalar_from<double>(ctx.payload["radius"]);
        o.r_inner = o.r_outer = r;
    }
    return o;
}

inline void report_series(const Context& ctx, const SeriesReport& rep) {
    ctx.diagnostics.push_back("terms=" + std::to_string(rep.terms));
    ctx.diagnostics.push_back("last_term_norm=" + json(rep.last_term).dump());
    if (rep.continued) ctx.diagnostics.push_back("continued past trunc=" + std::to_string(ctx.trunc()));
}

template <Scalar S>
json split_mul(const Context& ctx) {
    const json& p = ctx.payload;
    QPoly<double> c = io::qpoly_from<double>(field(p, "c"));
    AnnularPair pair = io::pair_from(p.value("pair", json()));
    double eps = p.contains("eps") ? io::scalar_from<double>(p["eps"]) : 0.5;
    std::string method = p.value("method", std::string(c.is_slice_preserving() ? "sp" : "general"));
    std::string order = p.value("order", std::string("a-first"));
    if (order != "a-first" && order != "b-first") malformed("order must be 'a-first' or 'b-first'");
    MultiplicativeSplit s;
    if (method == "sp") {
        s = multiplicative_split_sp(c, pair, eps);
    } else if (method == "general") {
        SplitOptions opt;
        opt.rho = p.contains("rho") ? io::scalar_from<double>(p["rho"]) : ctx.tol("rho", opt.rho);
        opt.target = ctx.tol("target", opt.target);
        opt.b_first = order == "b-first";
        s = multiplicative_split_general(c, pair, eps, opt);
    } else {
        malformed("method must be 'sp' or 'general'");
    }
    ctx.diagnostics.push_back("iterations=" + std::to_string(s.iterations));
    ctx.diagnostics.push_back("residual=" + json(s.residual).dump());
    return {{"a", io::qpoly_to(s.a)},
            {"b", io::qpoly_to(s.b)},
            {"order", s.b_first ? "b-first" : "a-first"},
            {"residual", s.residual},
            {"a_deviation", s.a_deviation},
            {"iterations", s.iterations}};
}

template <Scalar S>
json glue(const Context& ctx) {
    const json& p = ctx.payload;
    std::string mode = p.value("mode", std::string("additive"));
    GlueMode gm;
    if (mode == "additive") gm = GlueMode::Additive;
    else if (mode == "multiplicative") gm = GlueMode::Multiplicative;
    else malformed("mode must be 'additive' or 'multiplicative'");
    auto run = [&](auto tag) {
        using T = decltype(tag);
        std::vector<Transition<T>> data;
        const json& ts = field(p, "transitions");
        if (!ts.is_array()) malformed("transitions must be an array");
        for (const auto& t : ts) {
            const json& f = field(t, "from");
            const json& to = field(t, "to");
            if (!f.is_number_integer() || !to.is_number_integer()) malformed("transition indices must be integers");
            data.push_back({f.get<int>(), to.get<int>(), io::qpoly_from<T>(field(t, "value"))});
        }
        double eps = p.contains("eps") ? io::scalar_from<double>(p["eps"]) : 0.5;
        GlueResult<T> g = glue_chain(data, gm, eps);
        json parts = json::array();
        for (const auto& v : g.parts) parts.push_back(io::qpoly_to(v));
        ctx.diagnostics.push_back("residual=" + json(g.residual).dump());
        return json{{"parts", parts}, {"residual", g.residual}};
    };
    if (gm == GlueMode::Multiplicative || !is_exact_v<S>) return run(double{});
    return run(Rational{});
}

template <Scalar S>
json dispatch(const std::string& cmd, const Context& ctx) {
    const json& p = ctx.payload;
    auto f = [&]() { return io::qpoly_from<S>(field(p, "f")); };
    if (cmd == "eval") {
        Quaternion<S> q = io::quat_from<S>(field(p, "q"));
        if (p.contains("f") && p["f"].is_object() && p["f"].contains("numerator"))
            return io::quat_to(io::semiregular_from<S>(p["f"])(q));
        return io::quat_to(evaluate(f(), q));
    }
    if (cmd == "mul") {
        const json& a = field(p, "f");
        const json& b = field(p, "g");
        bool semi = (a.is_object() && a.contains("numerator")) || (b.is_object() && b.contains("numerator"));
        if (semi) return io::semiregular_to(semi_mul(io::semiregular_from<S>(a), io::semiregular_from<S>(b)));
        return io::qpoly_to(star_mul(io::qpoly_from<S>(a), io::qpoly_from<S>(b)));
    }
    if (cmd == "conj") return io::qpoly_to(regular_conjugate(f()));
    if (cmd == "symm") return io::qpoly_to(symmetrization(f()));
    if (cmd == "inv") return io::semiregular_to(star_inverse(f()));
    if (cmd == "components") {
        QPoly<S> g = f();
        auto parts = component_decompose(g);
        auto [f0, fv] = scalar_vector_split(g);
        json comps = json::array();
        for (const auto& c : parts) comps.push_back(io::qpoly_to(c));
        return {{"components", comps}, {"scalar", io::qpoly_to(f0)}, {"vector", io::qpoly_to(fv)}};
    }
    if (cmd == "matrep") {
        QPoly<S> g = f();
        if (p.contains("tag") && !p["tag"].is_null())
            return io::matrep2_to(to_matrix2(g, VectorClassTag<S>::of(io::quat_from<S>(p["tag"]))));
        return io::matrep_to(to_matrix(g));
    }
    if (cmd == "det") return io::qpoly_to(det_check(f()));
    if (cmd == "exp" || cmd == "log") {
        if constexpr (is_exact_v<S>) ctx.diagnostics.push_back("transcendental command evaluated in floating point");
        QPoly<double> g = io::qpoly_from<double>(field(p, "f"));
        SeriesReport rep = cmd == "exp" ? exp_star_report(g, series_options(ctx)) : log_star_report(g, series_options(ctx));
        report_series(ctx, rep);
        return io::qpoly_to(rep.value);
    }
    if (cmd == "zeros") return io::zeros_to(zero_set(f()));
    if (cmd == "build-zeros") return io::qpoly_to(build_with_zeros(io::divisor_from<S>(field(p, "divisor"))));
    if (cmd == "divisor") {
        SemiRegularFn<S> g = divisor_build(io::divisor_from<S>(field(p, "divisor")));
        json out = io::semiregular_to(g);
        if (!g.is_zero()) out["readback"] = io::divisor_to(divisor_of(g));
        return out;
    }
    if (cmd == "jet") {
        const json& ord = field(p, "order");
        if (!ord.is_number_integer()) malformed("order must be an integer");
        TaylorJet<S> j = taylor_jet(f(), io::quat_from<S>(field(p, "q0")), ord.get<int>());
        return {{"center", io::quat_to(j.center)}, {"coeffs", io::quats_to(j.coeffs)}};
    }
    if (cmd == "sjet") {
        const json& ord = field(p, "order");
        if (!ord.is_number_integer()) malformed("order must be an integer");
        std::optional<Quaternion<S>> anchor;
        if (p.contains("anchor") && !p["anchor"].is_null()) anchor = io::quat_from<S>(p["anchor"]);
        SphericalJet<S> j = spherical_expand(f(), io::sphere_from<S>(field(p, "sphere")), anchor, ord.get<int>());
        json out = {{"sphere", io::sphere_to(j.sphere)}, {"coeffs", io::quats_to(j.coeffs)}};
        out["anchor"] = anchor ? io::quat_to(*anchor) : json();
        out["spherical_multiplicity"] = j.first_nonzero();
        return out;
    }
    if (cmd == "interpolate") return io::qpoly_to(jet_interpolate(io::jetspec_from<S>(field(p, "spec"))));
    if (cmd == "split-add") {
        QPoly<S> g = io::qpoly_from<S>(field(p, "gamma"));
        SplitResult<S> s = additive_split(g, io::pair_from(p.value("pair", json())));
        ctx.diagnostics.push_back("d_constant=" + json(s.d_constant).dump());
        return {{"alpha", io::qpoly_to(s.alpha)},
                {"beta", io::qpoly_to(s.beta)},
                {"d_constant", s.d_constant},
                {"d_bound", s.d_bound}};
    }
    if (cmd == "split-mul") {
        if constexpr (is_exact_v<S>) ctx.diagnostics.push_back("transcendental command evaluated in floating point");
        return split_mul<S>(ctx);
    }
    if (cmd == "glue") return glue<S>(ctx);
    throw Error(ErrorCode::UnknownCommand, "unknown command '" + cmd + "'");
}

}  // namespace detail

/// One request to one response.  Never throws.
inline Response run(const json& request, const Defaults& defaults = {}) {
    Response resp;
    try {
        if (!request.is_object()) io::malformed("request must be a JSON object");
        const json& c = io::field(request, "command");
        if (!c.is_string()) io::malformed("command must be a string");
        std::string cmd = c.get<std::string>();
        Backend backend = defaults.backend;
        if (request.contains("backend")) {
            const json& b = request["backend"];
            if (b == "exact") backend = Backend::Exact;
            else if (b == "float") backend = Backend::Float;
            else io::malformed("backend must be 'exact' or 'float'");
        }
        static const json empty = json::object();
        const json& payload = request.contains("payload") ? request["payload"] : empty;
        if (!payload.is_object()) io::malformed("payload must be an object");
        const json& tol = request.contains("tolerances") ? request["tolerances"] : empty;
        detail::Context ctx{payload, tol, defaults, resp.diagnostics};
        resp.result = backend == Backend::Exact ? detail::dispatch<Rational>(cmd, ctx) : detail::dispatch<double>(cmd, ctx);
    } catch (const Error& e) {
        resp.ok = false;
        resp.code = e.code();
        resp.message = e.what();
    } catch (const nlohmann::json::exception& e) {
        resp.ok = false;
        resp.code = ErrorCode::MalformedInput;
        resp.message = e.what();
    } catch (const std::invalid_argument& e) {
        resp.ok = false;
        resp.code = ErrorCode::MalformedInput;
        resp.message = e.what();
    } catch (const std::exception& e) {
        resp.ok = false;
        resp.code = ErrorCode::InvalidSpec;
        resp.message = e.what();
    }
    if (!resp.ok) resp.result = json();
    return resp;
}

/// A single request or a batch; returns the output document and exit code.
inline std::pair<json, int> run_document(const std::string& text, const Defaults& defaults = {}) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        Response r;
        r.ok = false;
        r.code = ErrorCode::MalformedInput;
        r.message = e.what();
        return {r.to_json(), 2};
    }
    if (!doc.is_array()) {
        Response r = run(doc, defaults);
        return {r.to_json(), r.exit_code()};
    }
    json out = json::array();
    int code = 0;
    for (const auto& req : doc) {
        Response r = run(req, defaults);
        out.push_back(r.to_json());
        int e = r.exit_code();
        if (e == 2) code = 2;
        else if (e == 1 && code == 0) code = 1;
    }
    return {out, code};
}

}  // namespace srkit::cli

#endif  // SRKIT_CLI_HPP
