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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "srkit/cli.hpp"
#include "support.hpp"

using namespace srkit;
using namespace srkit::testing;
using json = nlohmann::json;

namespace {

cli::Response call(const std::string& text, const cli::Defaults& d = {}) { return cli::run(json::parse(text), d); }

json q_minus(int which) {
    json c = json::array({0, 0, 0, 0});
    c[which] = -1;
    return {{"coeffs", json::array({c, json::array({1, 0, 0, 0})})}};
}

}  // namespace

TEST(Cli, MulExample) {
    json req = {{"command", "mul"}, {"payload", {{"f", q_minus(1)}, {"g", q_minus(2)}}}};
    cli::Response r = cli::run(req);
    ASSERT_TRUE(r.ok) << r.message;
    P got = io::qpoly_from<Rational>(r.result);
    EXPECT_EQ(got, star_mul(P::linear(Q::i()), P::linear(Q::j())));
    EXPECT_EQ(got, P(0, {Q::k(), -Q::i() - Q::j(), Q(1)}));
    EXPECT_EQ(r.exit_code(), 0);
}

TEST(Cli, EvalExample) {
    cli::Response r = call(R"({"command":"eval","payload":{"f":{"min_degree":2,"coeffs":[[1,0,0,0]]},"q":[0,0,1,0]}})");
    ASSERT_TRUE(r.ok) << r.message;
    EXPECT_EQ(r.result, json::parse(R"(["-1","0","0","0"])"));
}

TEST(Cli, ExpReportsTruncation) {
    json req = {{"command", "exp"}, {"payload", {{"f", json::array({json::array({0, 2 * std::numbers::pi, 0, 0})})}}}};
    cli::Response r = cli::run(req);
    ASSERT_TRUE(r.ok) << r.message;
    QPoly<double> v = io::qpoly_from<double>(r.result);
    EXPECT_LT((v - QPoly<double>(1)).max_coeff_norm(), 1e-9);
    std::string diag = json(r.diagnostics).dump();
    EXPECT_NE(diag.find("terms"), std::string::npos) << diag;
}

TEST(Cli, ErrorCodes) {
    cli::Response a = call(R"({"command":"frobnicate"})");
    EXPECT_FALSE(a.ok);
    EXPECT_EQ(a.code, ErrorCode::UnknownCommand);
    EXPECT_EQ(a.exit_code(), 2);

    cli::Response b = call(R"({"command":"eval","payload":{"f":[[1,0,0]],"q":1}})");
    EXPECT_EQ(b.code, ErrorCode::MalformedInput);
    EXPECT_EQ(b.exit_code(), 2);

    cli::Response c = call(R"({"command":"inv","payload":{"f":[]}})");
    EXPECT_EQ(c.code, ErrorCode::ZeroFunction);
    EXPECT_EQ(c.exit_code(), 1);

    cli::Response d = call(R"({"command":"eval","payload":{"f":[[1,0,0,0]],"q":"x/y"}})");
    EXPECT_EQ(d.code, ErrorCode::MalformedInput);

    cli::Response e = call(R"({"command":"zeros","backend":"quantum","payload":{"f":[1]}})");
    EXPECT_EQ(e.code, ErrorCode::MalformedInput);

    json out = e.to_json();
    EXPECT_EQ(out["status"], "error");
    EXPECT_EQ(out["error"]["code"], "MalformedInput");
}

TEST(Cli, Batch) {
    auto [doc, code] = cli::run_document(R"([{"command":"symm","payload":{"f":[[0,-1,0,0],[1,0,0,0]]}},
                                              {"command":"inv","payload":{"f":[]}}])");
    ASSERT_TRUE(doc.is_array());
    ASSERT_EQ(doc.size(), 2u);
    EXPECT_EQ(doc[0]["status"], "ok");
    EXPECT_EQ(io::qpoly_from<Rational>(doc[0]["result"]), P(0, {Q(1), Q(0), Q(1)}));
    EXPECT_EQ(doc[1]["status"], "error");
    EXPECT_EQ(code, 1);

    auto [doc2, code2] = cli::run_document(R"([{"command":"inv","payload":{"f":[]}}, {"command":"nope"}])");
    EXPECT_EQ(code2, 2);
    auto [doc3, code3] = cli::run_document("{not json");
    EXPECT_EQ(code3, 2);
    EXPECT_EQ(doc3["error"]["code"], "MalformedInput");
}

TEST(Cli, ExactIsDeterministic) {
    std::string req = R"({"command":"zeros","payload":{"f":[[0,0,0,1],[0,-1,-1,0],[1,0,0,0]]}})";
    auto [a, ca] = cli::run_document(req);
    auto [b, cb] = cli::run_document(req);
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_EQ(ca, 0);
    ASSERT_EQ(a["result"].size(), 1u);
    EXPECT_EQ(a["result"][0]["kind"], "point");
    EXPECT_EQ(a["result"][0]["multiplicity"], 2);
    EXPECT_EQ(a["result"][0]["point"], json::parse(R"(["0","1","0","0"])"));
}

TEST(Cli, QPolyResultsReparse) {
    Gen g(91);
    for (int t = 0; t < 20; ++t) {
        P f = g.poly(4), h = g.poly(4);
        for (const char* cmd : {"mul", "conj", "symm"}) {
            json req = {{"command", cmd}, {"payload", {{"f", io::qpoly_to(f)}, {"g", io::qpoly_to(h)}}}};
            cli::Response r = cli::run(req);
            ASSERT_TRUE(r.ok) << r.message;
            P back = io::qpoly_from<Rational>(r.result);
            EXPECT_EQ(io::qpoly_to(back), r.result);
        }
    }
}

TEST(Cli, FloatBackendAndDefaults) {
    cli::Defaults d;
    d.backend = cli::Backend::Float;
    cli::Response r = call(R"({"command":"eval","payload":{"f":[[0,1,0,0]],"q":[0,0,1,0]}})", d);
    ASSERT_TRUE(r.ok);
    EXPECT_TRUE(r.result[0].is_number_float());
    cli::Response s = call(R"({"command":"eval","backend":"exact","payload":{"f":[[0,1,0,0]],"q":[0,0,1,0]}})", d);
    EXPECT_TRUE(s.result[0].is_string());
}

TEST(Cli, EveryCommandAnswers) {
    const char* requests[] = {
        R"({"command":"eval","payload":{"f":[[1,0,0,0],[0,1,0,0]],"q":[1,2,0,0]}})",
        R"({"command":"mul","payload":{"f":[[0,1,0,0]],"g":[[0,0,1,0]]}})",
        R"({"command":"conj","payload":{"f":[[1,2,3,4]]}})",
        R"({"command":"symm","payload":{"f":[[1,2,3,4]]}})",
        R"({"command":"inv","payload":{"f":[[0,-1,0,0],[1,0,0,0]]}})",
        R"({"command":"components","payload":{"f":[[1,2,3,4]]}})",
        R"({"command":"matrep","payload":{"f":[[0,1,0,0]]}})",
        R"({"command":"matrep","payload":{"f":[[0,3,0,0],[1,0,0,0]],"tag":[0,1,0,0]}})",
        R"({"command":"det","payload":{"f":[[0,-1,0,0],[1,0,0,0]]}})",
        R"({"command":"exp","payload":{"f":[[0,1,0,0]]}})",
        R"({"command":"log","payload":{"f":[1.5]}})",
        R"({"command":"zeros","payload":{"f":[[1,0,0,0],[0,0,0,0],[1,0,0,0]]}})",
        R"({"command":"build-zeros","payload":{"divisor":[{"node":{"type":"real","x":1},"order":1}]}})",
        R"({"command":"divisor","payload":{"divisor":[{"node":{"type":"sphere","a":0,"r":1},"order":2},{"node":{"type":"real","x":0},"order":-1}]}})",
        R"({"command":"jet","payload":{"f":{"min_degree":2,"coeffs":[[1,0,0,0]]},"q0":[0,1,0,0],"order":2}})",
        R"({"command":"sjet","payload":{"f":[[1,0,0,0],[0,0,0,0],[1,0,0,0]],"sphere":{"a":0,"r":1},"anchor":[0,1,0,0],"order":1}})",
        R"({"command":"interpolate","payload":{"spec":[{"node":{"type":"point","q":[0,1,0,0]},"jet":{"coeffs":[[0,0,0,0]]}},{"node":{"type":"real","x":1},"jet":{"coeffs":[[1,0,0,0]]}}]}})",
        R"({"command":"split-add","payload":{"gamma":{"min_degree":-1,"coeffs":[[1,0,0,0],[1,0,0,0],[1,0,0,0]]}}})",
        R"({"command":"split-mul","payload":{"c":{"min_degree":-1,"coeffs":[[0.1,0,0,0],[1,0,0,0],[0.1,0,0,0]]}}})",
        R"({"command":"split-mul","payload":{"c":{"min_degree":-1,"coeffs":[[0,0,0,0.03],[1,0,0,0],[0,0.05,0,0]]},"order":"b-first"}})",
        R"({"command":"glue","payload":{"transitions":[{"from":0,"to":1,"value":{"min_degree":-1,"coeffs":[[1,0,0,0],[0,0,0,0],[1,0,0,0]]}}]}})",
    };
    std::set<std::string> seen;
    for (const char* text : requests) {
        cli::Response r = call(text);
        EXPECT_TRUE(r.ok) << text << "\n" << r.message;
        seen.insert(json::parse(text)["command"].get<std::string>());
    }
    EXPECT_EQ(seen.size(), cli::commands().size());

    cli::Response d = call(requests[13]);
    EXPECT_EQ(io::qpoly_from<Rational>(d.result["numerator"]), P(0, {Q(1), Q(0), Q(1)}));
    EXPECT_EQ(io::qpoly_from<Rational>(d.result["denominator"]), P::variable());
    cli::Response j = call(requests[14]);
    EXPECT_EQ(j.result["coeffs"], json::parse(R"([["-1","0","0","0"],["0","2","0","0"],["1","0","0","0"]])"));
}
