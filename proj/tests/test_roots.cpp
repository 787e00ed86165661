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
#include <numeric>

#include "skew/parse.hpp"
#include "skew/pdep.hpp"
#include "skew/roots.hpp"
#include "skew/sigma_field.hpp"
#include "skew/tower.hpp"
#include "test_util.hpp"

namespace skew {
namespace {

SkewPolynomial P_(const FieldPtr& F, const char* s) { return parse_polynomial(F, s); }

std::vector<Element> brute_roots(const SkewPolynomial& P) {
    std::vector<Element> out;
    for (const auto& x : P.field()->elements())
        if (eval_right(P, x).is_zero()) out.push_back(x);
    return out;
}

template <class F>
void expect_code(ErrorCode code, F&& f) {
    try {
        f();
        ADD_FAILURE() << "no error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

TEST(Enumerate, Examples) {
    auto F4 = make_field("gf:2^2");
    auto u = F4->generator();
    EXPECT_EQ(enumerate_roots(SkewPolynomial::linear(u)).roots, std::vector<Element>{u});
    auto r = enumerate_roots(P_(F4, "T^2+1"));
    EXPECT_EQ(r.roots.size(), 3u);
    EXPECT_EQ(r.classes_hit, 1u);
    for (const auto& x : r.roots) EXPECT_FALSE(x.is_zero());
}

TEST(Enumerate, NormOneElementsOfQuadraticExtensions) {
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        auto F = make_field("gf:" + std::to_string(p) + "^2");
        auto r = enumerate_roots(P_(F, "T^2 - 1"));
        EXPECT_EQ(r.roots.size(), p + 1) << p;
        for (const auto& x : r.roots) EXPECT_TRUE(x.pow(p + 1).is_one());
    }
}

TEST(Enumerate, ReportIsConsistent) {
    std::mt19937_64 g(1);
    for (const char* d : {"gf:2^2", "gf:3^2", "gf:7", "gf:2^3:frob=2", "gf:2^4:frob=2"}) {
        auto F = make_field(d);
        for (int k = 0; k < 60; ++k) {
            auto P = testing::poly_of_degree(F, 1 + g() % 4, g);
            auto r = enumerate_roots(P);
            EXPECT_EQ(r.roots, brute_roots(P)) << d;
            EXPECT_LE(r.classes_hit, P.degree().value());
            EXPECT_EQ(r.classes_hit, r.per_class_counts.size());
            std::size_t total = 0;
            for (const auto& [rep, n] : r.per_class_counts) {
                total += n;
                EXPECT_EQ(conjugacy_class(rep).front(), rep);
            }
            EXPECT_EQ(total, r.roots.size());
            EXPECT_EQ(enumerate_roots(P, 3).roots, r.roots);
        }
    }
}

TEST(Kernel, Examples) {
    auto F4 = make_field("gf:2^2");
    auto k = class_roots_via_kernel(P_(F4, "T^2+1"));
    EXPECT_EQ(k.dimension, 2u);
    EXPECT_EQ(k.fixed_field_size, 2u);
    EXPECT_EQ(k.predicted_count, 3u);
    EXPECT_EQ(k.class_one_roots.size(), 3u);
    // T has only the root 0, which lies outside C(1).
    auto F9 = make_field("gf:3^2");
    auto z = class_roots_via_kernel(P_(F9, "T"));
    EXPECT_EQ(z.dimension, 0u);
    EXPECT_EQ(z.predicted_count, 0u);
    EXPECT_TRUE(z.class_one_roots.empty());
}

TEST(Kernel, AgreesWithBruteForceOnClassOfOne) {
    auto F9 = make_field("gf:3^2");
    auto C1 = conjugacy_class(F9->one());
    std::mt19937_64 g(2);
    for (int k = 0; k < 200; ++k) {
        auto P = testing::poly_of_degree(F9, 1 + g() % 4, g);
        // Force C(1) roots into some of them.
        if (k % 2) P = P * SkewPolynomial::linear(C1[g() % C1.size()]);
        auto ker = class_roots_via_kernel(P);
        std::vector<Element> want;
        for (const auto& x : brute_roots(P))
            if (std::binary_search(C1.begin(), C1.end(), x)) want.push_back(x);
        EXPECT_EQ(ker.class_one_roots, want);
        EXPECT_EQ(ker.predicted_count, want.size());
        for (const auto& x : ker.basis) {
            Element s = F9->zero();
            for (std::size_t i = 0; i < P.size(); ++i) s += P.coefficient(i) * x.sigma_power(static_cast<long long>(i));
            EXPECT_TRUE(s.is_zero());
        }
    }
}

TEST(FixedField, SizeIsPToTheGcd) {
    for (auto [d, p, k, n] : std::vector<std::tuple<const char*, std::uint64_t, unsigned, unsigned>>{
             {"gf:2^2", 2, 2, 1}, {"gf:3^2", 3, 2, 1}, {"gf:7", 7, 1, 1}, {"gf:2^3:frob=2", 2, 3, 2},
             {"gf:2^4:frob=2", 2, 4, 2}, {"gf:2^6:frob=4", 2, 6, 4}, {"gf:3^3:frob=3", 3, 3, 3}}) {
        auto F = make_field(d);
        auto fixed = fixed_field_elements(F);
        EXPECT_EQ(fixed.size(), ipow(p, std::gcd(k, n))) << d;
        for (const auto& x : fixed) EXPECT_EQ(x.sigma(), x);
    }
}

TEST(FrobeniusReduce, Examples) {
    auto F2 = make_field("gf:2");
    auto f = frobenius_reduce(P_(F2, "T^2+T+1"));
    EXPECT_EQ(f.to_string(), "x^3 + x + 1");
    auto F9 = make_field("gf:3^2");
    auto c = frobenius_reduce(P_(F9, "u+1"));
    EXPECT_EQ(c.degree(), 0u);
    EXPECT_EQ(frobenius_exponent(2, 1, 3), 7u);
    EXPECT_EQ(frobenius_exponent(3, 2, 2), 10u);
    expect_code(ErrorCode::WrongFieldKind, [] { (void)frobenius_reduce(P_(make_field("q"), "T")); });
}

TEST(FrobeniusReduce, AgreesInExtensions) {
    std::mt19937_64 g(3);
    for (auto [d, j] : std::vector<std::pair<const char*, unsigned>>{{"gf:2", 6}, {"gf:2^2", 3}, {"gf:3", 2}}) {
        auto K = make_field(d);
        auto ext = extend_finite_field(K, j);
        for (int k = 0; k < 50; ++k) {
            auto P = testing::poly_of_degree(K, 1 + g() % 4, g);
            auto f = frobenius_reduce(P);
            auto PL = ext.embedding(P);
            std::vector<Element> fc;
            for (const auto& c : f.coefficients()) fc.push_back(ext.embedding(c));
            OrdinaryPolynomial fL(ext.field, fc);
            for (const auto& a : ext.field->elements()) ASSERT_EQ(eval_right(PL, a), fL(a)) << d;
        }
    }
}

TEST(ClosureCount, Examples) {
    auto F2 = make_field("gf:2");
    EXPECT_EQ(closure_root_count(P_(F2, "T^2+T+1")).count, 3u);
    auto F3 = make_field("gf:3");
    auto c = closure_root_count(P_(F3, "T^2+T+1"));
    EXPECT_EQ(c.count, 4u);
    EXPECT_EQ(c.formula, 4u);
    EXPECT_EQ(closure_root_count(P_(make_field("gf:3^2"), "T - u")).count, 1u);
    expect_code(ErrorCode::ZeroConstantTerm, [&] { (void)closure_root_count(P_(F3, "T^2+T")); });
    expect_code(ErrorCode::WrongFieldKind, [] { (void)closure_root_count(P_(make_field("qi"), "T^2+1")); });
}

TEST(ClosureCount, MatchesFormula) {
    std::mt19937_64 g(4);
    for (const char* d : {"gf:2^2", "gf:3^2", "gf:5", "gf:2^4:frob=2", "gf:3^2:frob=2"}) {
        auto F = make_field(d);
        auto& desc = F->descriptor();
        for (int k = 0; k < 30; ++k) {
            std::size_t m = 1 + g() % 3;
            auto P = testing::poly_of_degree(F, m, g);
            if (P.coefficient(0).is_zero()) continue;
            auto c = closure_root_count(P);
            std::uint64_t q = ipow(desc.p, desc.frob);
            EXPECT_EQ(c.count, (ipow(q, static_cast<unsigned>(m)) - 1) / (q - 1)) << d;
            EXPECT_EQ(c.count, c.formula);
        }
    }
}

TEST(Degree2, TrivialSigmaHasARepeatedRoot) {
    auto F7 = make_field("gf:7");
    EXPECT_EQ(enumerate_roots(P_(F7, "T^2 - 2*T + 1")).roots.size(), 1u);
    auto rep = check_degree2_closedness(F7, 1);
    EXPECT_EQ(rep.polynomials, 6u * 7u * 6u);
    EXPECT_EQ(rep.min_count, 0u);  // T^2 - 3 has no root mod 7
    EXPECT_FALSE(rep.reaches_target);
}

TEST(Degree2, SweepOverF4) {
    auto F4 = make_field("gf:2^2");
    auto rep = check_degree2_closedness(F4, 1);
    EXPECT_EQ(rep.polynomials, 36u);
    std::map<std::uint64_t, std::uint64_t> hist;
    std::uint64_t lo = ~std::uint64_t{0};
    for (const auto& a0 : F4->elements())
        for (const auto& a1 : F4->elements())
            for (const auto& a2 : F4->elements()) {
                if (a0.is_zero() || a2.is_zero()) continue;
                auto n = brute_roots(SkewPolynomial(F4, {a0, a1, a2})).size();
                ++hist[n];
                lo = std::min<std::uint64_t>(lo, n);
            }
    EXPECT_EQ(rep.histogram, hist);
    EXPECT_EQ(rep.min_count, lo);
    EXPECT_EQ(rep.reaches_target, lo >= 1);
    EXPECT_TRUE(rep.kernel_consistent);
    expect_code(ErrorCode::InfiniteField, [] { (void)check_degree2_closedness(make_field("q"), 1); });
}

TEST(Vanishing, NonzeroAndVanishesEverywhere) {
    for (const char* d : {"gf:2^2", "gf:3^2", "gf:7", "gf:2^3:frob=2", "gf:2^4:frob=2"}) {
        auto F = make_field(d);
        auto W = vanishing_polynomial(F);
        EXPECT_FALSE(W.is_zero());
        EXPECT_TRUE(W.is_monic());
        for (const auto& x : F->elements()) EXPECT_TRUE(eval_right(W, x).is_zero()) << d;
        EXPECT_EQ(brute_roots(W).size(), testing::field_size(F));
    }
    // rank 1 for {0} plus rank 2 for F_4^*
    auto F4 = make_field("gf:2^2");
    EXPECT_EQ(vanishing_polynomial(F4).degree(), 3u);
}

TEST(Errors, InfiniteFields) {
    auto Q = make_field("q");
    expect_code(ErrorCode::InfiniteField, [&] { (void)enumerate_roots(P_(Q, "T - 1")); });
    expect_code(ErrorCode::InfiniteField, [&] { (void)class_roots_via_kernel(P_(Q, "T - 1")); });
    expect_code(ErrorCode::InvalidArgument, [] { (void)enumerate_roots(SkewPolynomial(make_field("gf:5"))); });
}

}  // namespace
}  // namespace skew
