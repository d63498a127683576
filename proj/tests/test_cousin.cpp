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

#include "support.hpp"

using namespace srkit;
using namespace srkit::testing;

namespace {

const AnnularPair pair_default{};

PD laurent_d(Gen& g, int lo, int hi, double scale) {
    std::vector<QD> c;
    for (int n = lo; n <= hi; ++n) c.push_back(g.quat_d(scale));
    return PD(lo, std::move(c));
}

// Random c with sup_C |c - 1| below `bound`.
PD gated(Gen& g, double bound, bool real_coeffs) {
    for (;;) {
        std::vector<QD> c;
        for (int n = -2; n <= 2; ++n) {
            QD a = g.quat_d(0.06 / (1 << std::abs(n)));
            c.push_back(real_coeffs ? QD(a.w) : a);
        }
        PD dev(-2, std::move(c));
        if (sampled_sup(dev, annulus_samples(pair_default)) < bound) return PD(1) + dev;
    }
}

double reconstruction_error(const MultiplicativeSplit& s, const PD& c, const AnnularPair& p) {
    PD prod = s.b_first ? star_mul(s.b, s.a) : star_mul(s.a, s.b);
    return sampled_sup(prod - c, annulus_samples(p));
}

}  // namespace

TEST(AnnularPair, SamplesAndValidation) {
    auto s = annulus_samples(pair_default);
    EXPECT_EQ(s.size(), 200u);
    int inner = 0;
    for (const auto& q : s) {
        bool on_in = std::fabs(q.norm() - 0.5) < 1e-12, on_out = std::fabs(q.norm() - 2.0) < 1e-12;
        EXPECT_TRUE(on_in || on_out);
        inner += on_in;
    }
    EXPECT_EQ(inner, 100);
    EXPECT_THROW((AnnularPair{2.0, 1.0}.validate()), Error);
    EXPECT_THROW((AnnularPair{0.0, 1.0}.validate()), Error);
}

TEST(AdditiveSplit, Examples) {
    P g(-1, {Q(1), Q(1), Q(1)});
    auto s = additive_split(g, pair_default);
    EXPECT_EQ(s.alpha, P::monomial(-1, Q(1)));
    EXPECT_EQ(s.beta, P(0, {Q(1), Q(1)}));

    P r(-2, {Q(3), Q(0), Q(frac(1, 2)), Q(-1)});
    auto t = additive_split(r, pair_default);
    EXPECT_TRUE(t.alpha.is_slice_preserving());
    EXPECT_TRUE(t.beta.is_slice_preserving());
}

TEST(AdditiveSplit, ExactPartitionAndClasses) {
    Gen g(81);
    for (int t = 0; t < 100; ++t) {
        P gamma = g.laurent(-4, 4);
        auto s = additive_split(gamma, pair_default);
        EXPECT_EQ(s.alpha + s.beta, gamma);
        EXPECT_LT(s.alpha.degree(), 0);
        EXPECT_GE(s.beta.min_degree(), 0);
        EXPECT_TRUE(std::isfinite(s.d_constant));

        Q v = g.unit_imaginary();
        auto tag = VectorClassTag<Rational>::of(v);
        P a(-3, {}), b;
        P h = P(-3, {Q(g.rational()), Q(g.rational()), Q(g.rational()), Q(g.rational()), Q(g.rational())}) +
              P(-3, {v * g.rational(), v * g.rational(), Q(), v * g.rational(), v * g.rational()});
        auto sv = additive_split(h, pair_default);
        EXPECT_TRUE(in_vector_class(sv.alpha, tag));
        EXPECT_TRUE(in_vector_class(sv.beta, tag));
        P sp = P::from_real(g.real_poly(4).real_part()) + P::monomial(-2, Q(g.rational()));
        auto ss = additive_split(sp, pair_default);
        EXPECT_TRUE(ss.alpha.is_slice_preserving());
        EXPECT_TRUE(ss.beta.is_slice_preserving());
    }
}

// |alpha| on A is largest on the inner sphere; check the estimate at several radii.
TEST(AdditiveSplit, SupEstimateAtSamples) {
    Gen g(82);
    for (int t = 0; t < 50; ++t) {
        PD gamma = laurent_d(g, -4, 4, 1.0);
        auto s = additive_split(gamma, pair_default);
        double bound = s.d_constant * s.gamma_sup * (1 + 1e-12);
        for (double r : {0.5, 0.75, 1.0, 2.0, 10.0})
            EXPECT_LE(sampled_sup(s.alpha, radius_samples(r, 198)), bound) << "radius " << r;
        EXPECT_LE(s.d_constant, s.d_bound * 1.05);
    }
}

TEST(MultiplicativeSplitSp, Examples) {
    auto one = multiplicative_split_sp(PD(1), pair_default, 0.5);
    EXPECT_LT((one.a - PD(1)).max_coeff_norm(), 1e-15);
    EXPECT_LT((one.b - PD(1)).max_coeff_norm(), 1e-15);

    PD c(-1, {QD(0.1), QD(1), QD(0.1)});
    auto s = multiplicative_split_sp(c, pair_default, 0.5);
    EXPECT_LT(reconstruction_error(s, c, pair_default), 1e-8);
    EXPECT_LT(s.residual, 1e-8);
    EXPECT_TRUE(s.a.is_slice_preserving());
    EXPECT_TRUE(s.b.is_slice_preserving());
    EXPECT_LT(s.a.degree(), 1);
    EXPECT_GE(s.b.min_degree(), 0);

    auto k = multiplicative_split_sp(PD(1.2), pair_default, 0.5);
    EXPECT_LT((k.a - PD(1)).max_coeff_norm(), 1e-14);
    EXPECT_LT((k.b - PD(1.2)).max_coeff_norm(), 1e-14);

    auto n = multiplicative_split_sp(PD(-1.2), pair_default, 0.5);
    EXPECT_LT((n.b - PD(-1.2)).max_coeff_norm(), 1e-14);
}

TEST(MultiplicativeSplitSp, Errors) {
    expect_error(ErrorCode::NotInClass, [] { multiplicative_split_sp(PD(QD(1, 0.1, 0, 0)), pair_default, 0.5); });
    expect_error(ErrorCode::VanishingOnC, [] { multiplicative_split_sp(PD::linear(QD(1)), pair_default, 0.5); });
    expect_error(ErrorCode::VanishingOnC, [] { multiplicative_split_sp(PD(), pair_default, 0.5); });
    expect_error(ErrorCode::OutsideConvergence, [] { multiplicative_split_sp(PD(0, {QD(1), QD(0), QD(1)}), pair_default, 0.5); });
    expect_error(ErrorCode::EpsilonUnattainable,
                 [] { multiplicative_split_sp(PD(-1, {QD(0.3), QD(1)}), pair_default, 1e-3); });
}

TEST(MultiplicativeSplitSp, RandomGated) {
    Gen g(83);
    for (int t = 0; t < 40; ++t) {
        PD c = gated(g, 0.125, true);
        auto s = multiplicative_split_sp(c, pair_default, 0.25);
        EXPECT_LT(reconstruction_error(s, c, pair_default), 1e-8);
        EXPECT_LT(s.a_deviation, 0.25);
        for (const auto& q : annulus_samples(pair_default)) {
            EXPECT_GT(s.a(q).norm(), 0);
            EXPECT_GT(s.b(q).norm(), 0);
        }
    }
}

TEST(MultiplicativeSplitGeneral, Examples) {
    auto one = multiplicative_split_general(PD(1), pair_default, 0.5);
    EXPECT_LT((one.a - PD(1)).max_coeff_norm(), 1e-15);
    EXPECT_LT((one.b - PD(1)).max_coeff_norm(), 1e-15);

    PD c(-1, {QD(0, 0, 0, 0.03), QD(1), QD(0, 0.05, 0, 0)});
    auto s = multiplicative_split_general(c, pair_default, 0.5);
    EXPECT_LT(reconstruction_error(s, c, pair_default), 1e-8);
    EXPECT_LT(s.a.degree(), 1);
    EXPECT_GE(s.b.min_degree(), 0);

    SplitOptions o;
    o.b_first = true;
    auto t = multiplicative_split_general(c, pair_default, 0.5, o);
    EXPECT_TRUE(t.b_first);
    EXPECT_LT(reconstruction_error(t, c, pair_default), 1e-8);
}

TEST(MultiplicativeSplitGeneral, EpsilonContract) {
    PD c(-1, {QD(0, 1e-4, 0, 2e-4), QD(1), QD(0, 0.05, 0.02, 0)});
    auto s = multiplicative_split_general(c, pair_default, 1e-3);
    std::vector<QD> a_samples = radius_samples(pair_default.r_inner, 198);
    EXPECT_EQ(a_samples.size(), 200u);
    EXPECT_LT(sampled_sup(s.a - PD(1), a_samples), 1e-3);
    EXPECT_LT(s.a_deviation, 1e-3);
}

TEST(MultiplicativeSplitGeneral, Errors) {
    expect_error(ErrorCode::OutsideConvergence,
                 [] { multiplicative_split_general(PD(0, {QD(1), QD(0, 0.2, 0, 0)}), pair_default, 0.5); });
    expect_error(ErrorCode::EpsilonUnattainable,
                 [] { multiplicative_split_general(PD(-1, {QD(0, 0.05, 0, 0), QD(1)}), pair_default, 1e-3); });
}

TEST(MultiplicativeSplitGeneral, RandomGatedBothOrders) {
    Gen g(84);
    for (int t = 0; t < 40; ++t) {
        PD c = gated(g, 0.125, false);
        for (bool b_first : {false, true}) {
            SplitOptions o;
            o.b_first = b_first;
            auto s = multiplicative_split_general(c, pair_default, 0.25, o);
            EXPECT_LT(reconstruction_error(s, c, pair_default), 1e-8);
            EXPECT_LT(s.a_deviation, 0.25);
            ASSERT_GE(s.history.size(), 1u);
            for (std::size_t n = 1; n < s.history.size(); ++n)
                EXPECT_LE(s.history[n], s.history[0] * std::pow(0.75, static_cast<double>(n)) + 1e-15);
        }
    }
}

TEST(GlueChain, AdditiveExamples) {
    auto z = glue_chain<Rational>({{0, 1, P()}}, GlueMode::Additive);
    ASSERT_EQ(z.parts.size(), 2u);
    EXPECT_TRUE(z.parts[0].is_zero());
    EXPECT_TRUE(z.parts[1].is_zero());

    P link(-1, {Q(1), Q(0), Q(1)});
    auto s = glue_chain<Rational>({{0, 1, link}}, GlueMode::Additive);
    EXPECT_EQ(s.parts[0] - s.parts[1], link);
    EXPECT_EQ(s.parts[0], P::monomial(-1, Q(1)));
    EXPECT_EQ(s.residual, 0);
}

TEST(GlueChain, AdditiveRandomExactAndSlicePreserving) {
    Gen g(85);
    for (int t = 0; t < 30; ++t) {
        int regions = g.integer(2, 5);
        std::vector<Transition<Rational>> data;
        bool sp = g.coin();
        for (int n = 0; n + 1 < regions; ++n) {
            P v = sp ? P::from_real(g.real_poly(3).real_part()) + P::monomial(-1, Q(g.rational())) : g.laurent(-3, 3);
            if (g.coin()) data.push_back({n, n + 1, v});
            else data.push_back({n + 1, n, -v});
        }
        auto r = glue_chain(data, GlueMode::Additive);
        ASSERT_EQ(r.parts.size(), static_cast<std::size_t>(regions));
        for (const auto& d : data) EXPECT_EQ(r.parts[d.from] - r.parts[d.to], d.value);
        if (sp)
            for (const auto& p : r.parts) EXPECT_TRUE(p.is_slice_preserving());
    }
}

TEST(GlueChain, MultiplicativeThreeRegions) {
    Gen g(86);
    for (int t = 0; t < 10; ++t) {
        std::vector<Transition<double>> data;
        for (int n = 0; n < 2; ++n) {
            AnnularPair p = chain_overlap(n);
            for (;;) {
                PD dev(-1, {g.quat_d(0.01 * p.r_inner), g.quat_d(0.03), g.quat_d(0.01 / p.r_outer)});
                if (sampled_sup(dev, annulus_samples(p)) < 0.1) {
                    data.push_back({n, n + 1, PD(1) + dev});
                    break;
                }
            }
        }
        auto r = glue_chain(data, GlueMode::Multiplicative);
        ASSERT_EQ(r.parts.size(), 3u);
        EXPECT_LT(r.residual, 1e-8);
        for (int n = 0; n < 2; ++n) {
            PD diff = r.parts[n + 1] - star_mul(data[n].value, r.parts[n]);
            EXPECT_LT(sampled_sup(diff, annulus_samples(chain_overlap(n))), 1e-8);
        }
    }
}

TEST(GlueChain, Errors) {
    expect_error(ErrorCode::IncompatibleChain, [] { glue_chain<Rational>({{0, 2, P(1)}}, GlueMode::Additive); });
    expect_error(ErrorCode::IncompatibleChain, [] { glue_chain<Rational>({{1, 2, P(1)}}, GlueMode::Additive); });
    expect_error(ErrorCode::IncompatibleChain,
                 [] { glue_chain<Rational>({{0, 1, P(1)}, {1, 0, P(1)}}, GlueMode::Additive); });
    EXPECT_NO_THROW(glue_chain<Rational>({{0, 1, P(1)}, {1, 0, P(-1)}}, GlueMode::Additive));
    expect_error(ErrorCode::InvalidSpec, [] { glue_chain<Rational>({{0, 1, P(1)}}, GlueMode::Multiplicative); });
}
