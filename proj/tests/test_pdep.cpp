/*
   Copyright 2026 The skewcalc Authors

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

#include <algorithm>

#include "skew/parse.hpp"
#include "skew/pdep.hpp"
#include "skew/roots.hpp"
#include "skew/sigma_field.hpp"
#include "test_util.hpp"

namespace skew {
namespace {

using testing::any;
using testing::distinct;
using testing::nonzero;

Element E_(const FieldPtr& F, const char* s) { return parse_element(F, s); }
SkewPolynomial P_(const FieldPtr& F, const char* s) { return parse_polynomial(F, s); }

std::vector<Element> elems(const FieldPtr& F, std::initializer_list<const char*> xs) {
    std::vector<Element> out;
    for (auto x : xs) out.push_back(E_(F, x));
    return out;
}

// Null space of an r x c matrix by plain elimination.
std::vector<std::vector<Element>> null_space(const FieldPtr& F, Matrix m, std::size_t cols) {
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Element inv = m[r][c].inverse();
        for (auto& x : m[r]) x = x * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Element f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<Element>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
        std::vector<Element> v(cols, F->zero());
        v[free] = F->one();
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free];
        basis.push_back(v);
    }
    return basis;
}

TEST(Rank, Examples) {
    auto F4 = make_field("gf:2^2");
    EXPECT_EQ(vandermonde_rank(elems(F4, {"u"})), 1u);
    EXPECT_EQ(vandermonde_rank(elems(F4, {"1", "u", "u^2"})), 2u);
    EXPECT_EQ(vandermonde_rank(elems(F4, {"u", "u"})), 1u);
    EXPECT_TRUE(is_p_independent(elems(F4, {"1", "u"})));
    EXPECT_FALSE(is_p_independent(elems(F4, {"1", "u", "u^2"})));
    std::mt19937_64 g(1);
    for (const auto& d : testing::shipped_fields()) {
        auto F = make_field(d);
        EXPECT_TRUE(is_p_independent({any(F, g)}));
    }
}

TEST(MinimalPolynomial, Examples) {
    auto F4 = make_field("gf:2^2");
    EXPECT_EQ(minimal_polynomial(F4, {}).minimal_poly, P_(F4, "1"));
    EXPECT_EQ(minimal_polynomial(F4, elems(F4, {"u"})).minimal_poly, P_(F4, "T - u"));
    EXPECT_EQ(minimal_polynomial(F4, elems(F4, {"1", "u"})).minimal_poly, P_(F4, "T^2 + 1"));
    auto all = minimal_polynomial(F4, elems(F4, {"1", "u", "u+1"}));
    EXPECT_EQ(all.minimal_poly, P_(F4, "T^2 + 1"));
    EXPECT_EQ(all.rank, 2u);
    EXPECT_EQ(all.basis, (std::vector<std::size_t>{0, 1}));
}

TEST(MinimalPolynomial, RankAgreesWithVandermonde) {
    std::mt19937_64 g(2);
    for (const auto& d : testing::shipped_fields()) {
        auto F = make_field(d);
        for (int k = 0; k < 60; ++k) {
            std::size_t n = 1 + g() % 4;
            std::vector<Element> S;
            for (std::size_t i = 0; i < n; ++i) S.push_back(any(F, g));
            // Repeat and conjugate elements to force dependence now and then.
            if (g() % 3 == 0) S.push_back(conjugate(S[0], nonzero(F, g)));
            auto A = minimal_polynomial(F, S);
            EXPECT_TRUE(A.minimal_poly.is_monic());
            EXPECT_EQ(A.minimal_poly.degree(), A.rank);
            EXPECT_EQ(A.rank, vandermonde_rank(S)) << d;
            for (const auto& a : S) EXPECT_TRUE(eval_right(A.minimal_poly, a).is_zero());
        }
    }
}

TEST(MinimalPolynomial, OrderIndependent) {
    std::mt19937_64 g(3);
    for (const auto& d : testing::shipped_fields()) {
        auto F = make_field(d);
        for (int k = 0; k < 40; ++k) {
            std::size_t n = 1 + g() % 5;
            std::vector<Element> S;
            for (std::size_t i = 0; i < n; ++i) S.push_back(any(F, g));
            auto P = minimal_polynomial(F, S).minimal_poly;
            for (int r = 0; r < 2; ++r) {
                std::shuffle(S.begin(), S.end(), g);
                EXPECT_EQ(minimal_polynomial(F, S).minimal_poly, P) << d;
            }
        }
    }
}

TEST(MinimalPolynomial, VanishingPolynomialsAreLeftMultiples) {
    std::mt19937_64 g(4);
    for (const char* d : {"gf:2^2", "gf:3^2", "gf:7", "gf:2^3:frob=2"}) {
        auto F = make_field(d);
        auto W = vanishing_polynomial(F);
        for (int k = 0; k < 50; ++k) {
            std::vector<Element> S;
            for (std::size_t i = 0, n = 1 + g() % 4; i < n; ++i) S.push_back(any(F, g));
            auto PS = minimal_polynomial(F, S).minimal_poly;
            EXPECT_TRUE(right_divmod(W, PS).remainder.is_zero()) << d;
            // lclm of the linear factors is another route to a vanishing polynomial.
            SkewPolynomial L = SkewPolynomial::linear(S[0]);
            for (const auto& a : S) L = lclm(L, SkewPolynomial::linear(a));
            EXPECT_EQ(L, PS);
            auto bigger = S;
            bigger.push_back(any(F, g));
            auto PB = minimal_polynomial(F, bigger).minimal_poly;
            EXPECT_TRUE(right_divmod(PB, PS).remainder.is_zero());
        }
    }
}

TEST(EvalDet, Examples) {
    auto F4 = make_field("gf:2^2");
    EXPECT_EQ(minpoly_eval_det(elems(F4, {"1"}), E_(F4, "u")), E_(F4, "u+1"));
    EXPECT_TRUE(minpoly_eval_det(elems(F4, {"1", "u"}), E_(F4, "u")).is_zero());
    try {
        (void)minpoly_eval_det(elems(F4, {"1", "u", "u+1"}), E_(F4, "1"));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPIndependent);
    }
}

TEST(EvalDet, MatchesEvaluation) {
    std::mt19937_64 g(5);
    for (const auto& d : testing::shipped_fields()) {
        auto F = make_field(d);
        for (int k = 0; k < 200; ++k) {
            std::vector<Element> S;
            for (std::size_t i = 0, n = 1 + g() % 3; i < n; ++i) S.push_back(any(F, g));
            if (!is_p_independent(S)) continue;
            Element a = any(F, g);
            EXPECT_EQ(minpoly_eval_det(S, a), eval_right(minimal_polynomial(F, S).minimal_poly, a)) << d;
        }
    }
}

TEST(Vieta, Examples) {
    auto F4 = make_field("gf:2^2");
    auto v = minpoly_coeffs_vieta(F4, elems(F4, {"1", "u"}));
    EXPECT_EQ(v.poly, P_(F4, "T^2 + 1"));
    EXPECT_EQ(v.det, E_(F4, "u+1"));
    EXPECT_TRUE(v.b0_closed_form.is_one());
    auto Q = make_field("q");
    auto one = minpoly_coeffs_vieta(Q, {Q->from_integer(5)});
    EXPECT_EQ(one.poly, P_(Q, "T - 5"));
    EXPECT_EQ(one.b0_closed_form, Q->from_integer(-5));
}

TEST(Vieta, AgreesWithIncrementalConstruction) {
    std::mt19937_64 g(6);
    for (const char* d : {"gf:3^2", "qi", "gf:2^3:frob=2", "qx-inv"}) {
        auto F = make_field(d);
        int tested = 0;
        for (int k = 0; k < 300 && tested < 100; ++k) {
            std::size_t n = 1 + g() % (F->descriptor().kind == FieldDescriptor::Kind::RationalFunctions ? 2 : 4);
            std::vector<Element> S;
            for (std::size_t i = 0; i < n; ++i) S.push_back(any(F, g));
            if (!is_p_independent(S)) continue;
            ++tested;
            auto v = minpoly_coeffs_vieta(F, S);
            EXPECT_EQ(v.poly, minimal_polynomial(F, S).minimal_poly) << d;
            EXPECT_EQ(v.poly.coefficient(0), v.b0_closed_form) << d;
        }
        EXPECT_GE(tested, 50) << d;
    }
}

TEST(Interpolate, Examples) {
    auto Q = make_field("q");
    EXPECT_EQ(interpolate(Q, {Q->from_integer(3)}, {Q->from_integer(7)}), P_(Q, "7"));
    auto F4 = make_field("gf:2^2");
    EXPECT_TRUE(interpolate(F4, elems(F4, {"1", "u"}), elems(F4, {"0", "0"})).is_zero());
    try {
        (void)interpolate(F4, elems(F4, {"1", "u", "u+1"}), elems(F4, {"0", "0", "1"}));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPIndependent);
    }
}

TEST(Interpolate, HitsValues) {
    std::mt19937_64 g(7);
    for (const auto& d : testing::shipped_fields()) {
        auto F = make_field(d);
        for (int k = 0; k < 60; ++k) {
            std::vector<Element> S, b;
            for (std::size_t i = 0, n = 1 + g() % 4; i < n; ++i) S.push_back(any(F, g));
            if (!is_p_independent(S)) continue;
            for (std::size_t i = 0; i < S.size(); ++i) b.push_back(any(F, g));
            auto P = interpolate(F, S, b);
            EXPECT_TRUE(P.is_zero() || P.degree().value() < S.size());
            for (std::size_t i = 0; i < S.size(); ++i) EXPECT_EQ(eval_right(P, S[i]), b[i]) << d;
            // Adding a left multiple of P_S keeps the values.
            auto PS = minimal_polynomial(F, S).minimal_poly;
            auto P2 = P + testing::poly_up_to(F, 2, g) * PS;
            for (std::size_t i = 0; i < S.size(); ++i) EXPECT_EQ(eval_right(P2, S[i]), b[i]);
        }
    }
}

TEST(Interpolate, ValuesOnABasisDetermineDependentPoints) {
    std::mt19937_64 g(8);
    for (const char* d : {"gf:2^2", "gf:3^2", "gf:2^3:frob=2"}) {
        auto F = make_field(d);
        auto elements = F->elements();
        for (int k = 0; k < 20; ++k) {
            std::vector<Element> S;
            for (std::size_t i = 0, n = 1 + g() % 2; i < n; ++i) S.push_back(nonzero(F, g));
            if (!is_p_independent(S)) continue;
            auto PS = minimal_polynomial(F, S).minimal_poly;
            std::vector<SkewPolynomial> Pi;
            for (std::size_t i = 0; i < S.size(); ++i) {
                std::vector<Element> rest;
                for (std::size_t j = 0; j < S.size(); ++j)
                    if (j != i) rest.push_back(S[j]);
                Pi.push_back(minimal_polynomial(F, rest).minimal_poly);
            }
            for (const auto& a : elements) {
                if (!eval_right(PS, a).is_zero()) continue;
                for (int q = 0; q < 100; ++q) {
                    auto Qp = testing::poly_up_to(F, 5, g);
                    Element sum = F->zero();
                    for (std::size_t i = 0; i < S.size(); ++i)
                        sum += eval_right(Qp, S[i]) / eval_right(Pi[i], S[i]) * eval_right(Pi[i], a);
                    ASSERT_EQ(eval_right(Qp, a), sum) << d;
                }
            }
        }
    }
}

TEST(Vandermonde, DependenciesPersistToDepthTwoN) {
    std::mt19937_64 g(9);
    for (const auto& d : testing::shipped_fields()) {
        auto F = make_field(d);
        for (int k = 0; k < 40; ++k) {
            std::size_t n = 2 + g() % 3;
            std::vector<Element> S;
            for (std::size_t i = 0; i < n; ++i) S.push_back(any(F, g));
            // Plant a dependence: a conjugate of a combination of classes.
            if (F->is_finite()) S.back() = conjugate(S[0], nonzero(F, g));
            if (F->descriptor().kind == FieldDescriptor::Kind::RationalFunctions && n > 3) S.resize(3);
            n = S.size();
            auto V = sigma_vandermonde(S, 2 * n + 1);
            Matrix top(V.begin(), V.begin() + static_cast<long>(n));
            for (const auto& b : null_space(F, top, n)) {
                for (std::size_t j = n; j <= 2 * n; ++j) {
                    Element s = F->zero();
                    for (std::size_t i = 0; i < n; ++i) s += b[i] * V[j][i];
                    EXPECT_TRUE(s.is_zero()) << d << " row " << j;
                }
            }
        }
    }
}

TEST(BrayWhaples, RepresentativesOfDistinctClasses) {
    auto F9 = make_field("gf:3^2");
    auto classes = sigma_conjugacy_classes(F9);
    ASSERT_EQ(classes.size(), 3u);
    for (const auto& a : classes[1])
        for (const auto& b : classes[2]) {
            auto P = bray_whaples(F9, {a, b});
            EXPECT_TRUE(P.is_monic());
            EXPECT_EQ(P.degree(), 2u);
            std::vector<Element> brute;
            for (const auto& x : F9->elements())
                if (eval_right(P, x).is_zero()) brute.push_back(x);
            auto want = std::vector<Element>{a, b};
            std::sort(want.begin(), want.end());
            EXPECT_EQ(brute, want);
            // {0, a, b}: one point per class.
            auto P3 = bray_whaples(F9, {F9->zero(), a, b});
            EXPECT_EQ(enumerate_roots(P3).roots.size(), 3u);
        }
}

TEST(BrayWhaples, ZeroAndOneOther) {
    for (const char* d : {"gf:2^2", "gf:3^2", "gf:7", "gf:2^3:frob=2"}) {
        auto F = make_field(d);
        for (const auto& a : F->elements()) {
            if (a.is_zero()) continue;
            auto P = bray_whaples(F, {F->zero(), a});
            std::vector<Element> brute;
            for (const auto& x : F->elements())
                if (eval_right(P, x).is_zero()) brute.push_back(x);
            EXPECT_EQ(brute, (std::vector<Element>{F->zero(), a})) << d;
        }
        auto a = F->element_at(1);
        EXPECT_EQ(bray_whaples(F, {a}), SkewPolynomial::linear(a));
    }
}

TEST(BrayWhaples, RejectsConjugatePairs) {
    auto F9 = make_field("gf:3^2");
    auto cls = sigma_conjugacy_classes(F9)[1];
    try {
        (void)bray_whaples(F9, {cls[0], cls[1]});
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ConjugatePairDetected);
    }
    auto Qi = make_field("qi");
    Element a = E_(Qi, "1+2i");
    try {
        (void)bray_whaples(Qi, {a, conjugate(a, E_(Qi, "3-i"))});
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ConjugatePairDetected);
    }
    // |1+2i|^2 = 5 differs from |1+i|^2 = 2.
    auto P = bray_whaples(Qi, {a, E_(Qi, "1+i")});
    EXPECT_TRUE(eval_right(P, a).is_zero());
    EXPECT_TRUE(eval_right(P, E_(Qi, "1+i")).is_zero());
}

TEST(HatSet, Examples) {
    auto Qi = make_field("qi");
    auto a = E_(Qi, "2-3i");
    EXPECT_EQ(hat_set_left_rank({a}), 1u);
    // sigma is an involution, so sigma^-1 = sigma.
    auto h = hat_set({a, E_(Qi, "i")});
    EXPECT_EQ(h[0], a.inverse().sigma());
    EXPECT_EQ(h[1], E_(Qi, "i"));
    auto F9 = make_field("gf:3^2");
    std::vector<Element> star;
    for (const auto& x : F9->elements())
        if (!x.is_zero()) star.push_back(x);
    EXPECT_EQ(hat_set_left_rank(star), vandermonde_rank(star));
    try {
        (void)hat_set({F9->zero()});
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroElement);
    }
}

TEST(HatSet, LeftRankOfHatEqualsRank) {
    std::mt19937_64 g(10);
    for (const auto& d : testing::shipped_fields()) {
        auto F = make_field(d);
        for (int k = 0; k < 100; ++k) {
            std::vector<Element> S;
            for (std::size_t i = 0, n = 1 + g() % 5; i < n; ++i) S.push_back(nonzero(F, g));
            if (F->descriptor().kind == FieldDescriptor::Kind::RationalFunctions && S.size() > 3) S.resize(3);
            EXPECT_EQ(hat_set_left_rank(S), minimal_polynomial(F, S).rank) << d;
        }
    }
}

}  // namespace
}  // namespace skew
