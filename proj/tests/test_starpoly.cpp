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

#include "support.hpp"

using namespace srkit;
using namespace srkit::testing;

namespace {

const Q I = Q::i(), J = Q::j(), K = Q::k();

P poly(std::vector<Q> c, int m = 0) { return P(m, std::move(c)); }

P lin(const Q& c) { return P::linear(c); }

}  // namespace

TEST(StarMul, Examples) {
    // c0 = (-i)(-j) = k, c1 = -i - j, c2 = 1
    EXPECT_EQ(star_mul(lin(I), lin(J)), poly({K, -I - J, Q(1)}));
    // c0 = (-i)(i) = 1, c1 = 0
    EXPECT_EQ(star_mul(lin(I), lin(-I)), poly({Q(1), Q(0), Q(1)}));
    Gen g(21);
    for (int t = 0; t < 20; ++t) {
        P f = g.poly(6);
        EXPECT_EQ(star_mul(P(1), f), f);
        EXPECT_EQ(star_mul(f, P(1)), f);
    }
}

TEST(StarMul, DegreesAdd) {
    Gen g(22);
    for (int t = 0; t < 50; ++t) {
        P f = g.poly(6), h = g.poly(6);
        if (f.is_zero() || h.is_zero()) continue;
        EXPECT_EQ(star_mul(f, h).degree(), f.degree() + h.degree());
    }
}

TEST(StarMul, AssociativeAndBilinear) {
    Gen g(23);
    for (int t = 0; t < 60; ++t) {
        P a = g.poly(8), b = g.poly(8), c = g.poly(8);
        Rational s = g.rational();
        EXPECT_EQ(star_mul(star_mul(a, b), c), star_mul(a, star_mul(b, c)));
        EXPECT_EQ(star_mul(a, b + c), star_mul(a, b) + star_mul(a, c));
        EXPECT_EQ(star_mul(a + b, c), star_mul(a, c) + star_mul(b, c));
        EXPECT_EQ(star_mul(s * a, b), s * star_mul(a, b));
    }
}

TEST(StarMul, SlicePreservingFactorIsPointwiseAndCentral) {
    Gen g(24);
    for (int t = 0; t < 60; ++t) {
        P f = g.real_poly(5), h = g.poly(5);
        EXPECT_EQ(star_mul(f, h), star_mul(h, f));
        Q x = g.quat();
        EXPECT_EQ(evaluate(star_mul(f, h), x), evaluate(f, x) * evaluate(h, x));
    }
}

TEST(RegularConjugate, Examples) {
    EXPECT_EQ(regular_conjugate(lin(I)), lin(-I));
    P r = poly({Q(3), Q(-1), Q(2)});
    EXPECT_EQ(regular_conjugate(r), r);
    EXPECT_EQ(regular_conjugate(poly({J, K})), poly({-J, -K}));
}

TEST(RegularConjugate, AntiMultiplicative) {
    Gen g(25);
    for (int t = 0; t < 60; ++t) {
        P f = g.poly(8), h = g.poly(8);
        EXPECT_EQ(regular_conjugate(star_mul(f, h)), star_mul(regular_conjugate(h), regular_conjugate(f)));
        auto [f0, fv] = scalar_vector_split(f);
        EXPECT_EQ(regular_conjugate(f), f0 - fv);
    }
}

TEST(Symmetrization, Examples) {
    P q2p1 = poly({Q(1), Q(0), Q(1)});
    EXPECT_EQ(symmetrization(lin(I)), q2p1);
    EXPECT_TRUE(symmetrization(P()).is_zero());
    EXPECT_EQ(symmetrization(star_mul(lin(I), lin(J))), q2p1 * q2p1);
}

TEST(Symmetrization, RealMultiplicativeAndTwoSided) {
    Gen g(26);
    for (int t = 0; t < 60; ++t) {
        P f = g.poly(8), h = g.poly(8);
        P fs = symmetrization(f);
        EXPECT_TRUE(fs.is_slice_preserving());
        EXPECT_EQ(fs, star_mul(f, regular_conjugate(f)));
        EXPECT_EQ(fs, star_mul(regular_conjugate(f), f));
        EXPECT_EQ(symmetrization(star_mul(f, h)), star_mul(fs, symmetrization(h)));
        if (!f.is_zero()) {
            EXPECT_EQ(fs.degree(), 2 * f.degree());
        }
    }
}

TEST(ScalarVectorSplit, Examples) {
    auto [a0, av] = scalar_vector_split(poly({I, Q(1)}));
    EXPECT_EQ(a0, P::variable());
    EXPECT_EQ(av, P(I));
    P r = poly({Q(2), Q(5)});
    auto [b0, bv] = scalar_vector_split(r);
    EXPECT_EQ(b0, r);
    EXPECT_TRUE(bv.is_zero());
    // q(1 + j) + k -> (q, qj + k)
    auto [c0, cv] = scalar_vector_split(poly({K, Q(1) + J}));
    EXPECT_EQ(c0, P::variable());
    EXPECT_EQ(cv, poly({K, J}));
}

TEST(ComponentDecompose, Examples) {
    auto c = component_decompose(P(I));
    EXPECT_TRUE(c[0].is_zero());
    EXPECT_EQ(c[1], P(1));
    EXPECT_TRUE(c[2].is_zero());
    EXPECT_TRUE(c[3].is_zero());

    auto d = component_decompose(poly({Q(-3), Q(0), K}));
    EXPECT_EQ(d[0], P(-3));
    EXPECT_TRUE(d[1].is_zero());
    EXPECT_TRUE(d[2].is_zero());
    EXPECT_EQ(d[3], P::monomial(2, Q(1)));
}

TEST(ComponentDecompose, Bijective) {
    Gen g(27);
    for (int t = 0; t < 100; ++t) {
        P f = g.laurent(-2, g.integer(-2, 5));
        auto parts = component_decompose(f);
        for (const auto& p : parts) EXPECT_TRUE(p.is_slice_preserving());
        EXPECT_EQ(component_recompose(parts), f);
    }
}

TEST(StarInverse, Examples) {
    SemiRegularFn<Rational> a = star_inverse(P(I * Rational(2)));
    EXPECT_EQ(a.numerator(), P(I * Rational(-2)));
    EXPECT_EQ(a.denominator(), P(4));
    EXPECT_EQ(a(Q(0)), I * frac(-1, 2));
    EXPECT_EQ(a.reduced().numerator(), P(I * frac(-1, 2)));

    SemiRegularFn<Rational> b = star_inverse(lin(I));
    EXPECT_EQ(b.numerator(), lin(-I));
    EXPECT_EQ(b.denominator(), poly({Q(1), Q(0), Q(1)}));

    try {
        star_inverse(P());
        FAIL() << "expected ZeroFunction";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroFunction);
    }
}

TEST(StarInverse, IsTwoSidedInverse) {
    Gen g(28);
    for (int t = 0; t < 40; ++t) {
        P f = g.poly(5);
        if (f.is_zero()) continue;
        SemiRegularFn<Rational> inv = star_inverse(f);
        SemiRegularFn<Rational> one = semi_mul(SemiRegularFn<Rational>(f), inv);
        EXPECT_EQ(one.numerator(), P(1));
        EXPECT_EQ(one.denominator(), P(1));
        SemiRegularFn<Rational> one2 = semi_mul(inv, SemiRegularFn<Rational>(f));
        EXPECT_EQ(one2.numerator(), P(1));
    }
}

TEST(Evaluate, Examples) {
    EXPECT_EQ(evaluate(P::monomial(2, Q(1)), J), Q(-1));
    EXPECT_EQ(evaluate(P::monomial(1, I), J), -K);  // j i = -k
    EXPECT_EQ(evaluate(star_mul(lin(I), lin(J)), I), Q(0));
}

TEST(Evaluate, LaurentAndPoleAtZero) {
    P f = poly({Q(1), Q(2), Q(3)}, -2);  // q^-2 + 2 q^-1 + 3
    // At q = 2: 1/4 + 1 + 3
    EXPECT_EQ(evaluate(f, Q(2)), Q(frac(17, 4)));
    P g = P::monomial(-3, I);
    // (i)^-3 i = (i^-1)^3 i = i * i = -1 ... i^-1 = -i, (-i)^3 = i, i * i = -1
    EXPECT_EQ(evaluate(g, I), Q(-1));
    try {
        evaluate(f, Q(0));
        FAIL() << "expected PoleAtZero";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PoleAtZero);
    }
}

TEST(Evaluate, SlicePreservingKeepsSlice) {
    Gen g(29);
    for (int t = 0; t < 60; ++t) {
        P f = g.real_poly(6);
        Q u = g.unit_imaginary();
        Q z = Q(g.rational()) + u * g.rational();
        Q v = evaluate(f, z);
        // v lies in span{1, u}
        EXPECT_TRUE(imaginary_along(v, u).has_value());
    }
}

TEST(Evaluate, ZeroPreservedByRightMultiplication) {
    Gen g(30);
    for (int t = 0; t < 60; ++t) {
        Q z = g.quat();
        P f = star_mul(lin(z), g.poly(4));
        P h = g.poly(4);
        ASSERT_EQ(evaluate(f, z), Q(0));
        EXPECT_EQ(evaluate(star_mul(f, h), z), Q(0));
    }
}

TEST(StemEvaluate, Examples) {
    EXPECT_EQ(stem_evaluate(P::monomial(2, Q(1)), Rational(0), Rational(1), K), Q(-1));
    EXPECT_EQ(stem_evaluate(P::monomial(1, I), Rational(0), Rational(1), J), -K);
    Q c = Q(Rational(3), frac(1, 2), Rational(-2), Rational(5));
    EXPECT_EQ(stem_evaluate(P(c), Rational(7), frac(2, 3), I), c);
    try {
        stem_evaluate(P(1), Rational(0), Rational(1), Q(0, 1, 1, 0));
        FAIL() << "expected NotUnitImaginary";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotUnitImaginary);
    }
}

TEST(StemEvaluate, MatchesEvaluateOnGrid) {
    Gen g(31);
    for (int t = 0; t < 10; ++t) {
        P f = g.laurent(g.integer(-2, 0), g.integer(0, 5));
        Q units[4] = {I, J, K, g.unit_imaginary()};
        for (int a = 0; a < 20; ++a)
            for (int b = 0; b < 20; ++b)
                for (const Q& u : units) {
                    Rational x = frac(a - 10, 3), y = frac(b + 1, 4);
                    EXPECT_EQ(stem_evaluate(f, x, y, u), evaluate(f, Q(x) + u * y));
                }
    }
}

TEST(StemEvaluate, ConjugateSymmetry) {
    Gen g(32);
    for (int t = 0; t < 40; ++t) {
        P f = g.poly(6);
        Rational x = g.rational(), y = g.rational();
        StemValue<Rational> a = stem_value(f, x, y);
        StemValue<Rational> b = stem_value(f, x, Rational(-y));
        EXPECT_EQ(a.F1, b.F1);
        EXPECT_EQ(a.F2, -b.F2);
    }
}

TEST(VectorClass, Examples) {
    auto ti = VectorClassTag<Rational>::of(I);
    EXPECT_TRUE(in_vector_class(poly({I * Rational(3), Q(1)}), ti));
    EXPECT_FALSE(in_vector_class(poly({J, Q(1)}), ti));
    Gen g(33);
    for (int t = 0; t < 20; ++t) EXPECT_TRUE(in_vector_class(g.real_poly(5), VectorClassTag<Rational>::zero()));
    EXPECT_THROW(VectorClassTag<Rational>::of(Q(0, 1, 1, 0)), Error);
}

TEST(VectorClass, SameClassCommutes) {
    Gen g(34);
    for (int t = 0; t < 60; ++t) {
        Q v = g.unit_imaginary();
        P f = g.real_poly(4) + g.real_poly(4) * P(v);
        P h = g.real_poly(4) + g.real_poly(4) * P(v);
        auto tag = VectorClassTag<Rational>::of(v);
        ASSERT_TRUE(in_vector_class(f, tag));
        ASSERT_TRUE(in_vector_class(h, tag));
        EXPECT_EQ(star_mul(f, h), star_mul(h, f));
        EXPECT_TRUE(in_vector_class(star_mul(f, h), tag));
    }
}

// Componentwise bounds at a point z in the slice C_I.  |f_l(z)| <= |f(z)| fails
// in general; the bound holds with max(|f(z)|, |f(conj z)|).
TEST(ComponentBounds, PointwiseBoundNeedsMirrorPoint) {
    P f = lin(I);
    auto parts = component_decompose(f);
    EXPECT_EQ(evaluate(f, I), Q(0));
    EXPECT_EQ(evaluate(parts[0], I), I);  // |f_0(i)| = 1 > |f(i)| = 0
    EXPECT_EQ(evaluate(f, -I).norm2(), 4);
}

TEST(ComponentBounds, HoldAtRandomPoints) {
    Gen g(35);
    for (int t = 0; t < 100; ++t) {
        PD f = g.poly_d(5);
        QD z = g.quat_d(2.0);
        QD mirror = QD(z.w) - z.imag();
        double bound = std::max(evaluate(f, z).norm(), evaluate(f, mirror).norm());
        for (const auto& part : component_decompose(f))
            EXPECT_LE(evaluate(part, z).norm(), bound * (1 + 1e-12) + 1e-14);
    }
}
