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

#include "skew/finite_field.hpp"
#include "skew/parse.hpp"
#include "skew/sigma_field.hpp"
#include "test_util.hpp"

namespace skew {
namespace {

using testing::any;
using testing::nonzero;
using testing::shipped_fields;

Element el(const FieldPtr& F, const char* s) { return parse_element(F, s); }

TEST(Descriptor, ParsesEachKind) {
    EXPECT_EQ(FieldDescriptor::parse("q").kind, FieldDescriptor::Kind::Rationals);
    EXPECT_EQ(FieldDescriptor::parse("qi").kind, FieldDescriptor::Kind::GaussianRationals);
    EXPECT_EQ(FieldDescriptor::parse("qx-inv").kind, FieldDescriptor::Kind::RationalFunctions);
    auto p = FieldDescriptor::parse("gf:5");
    EXPECT_EQ(p.kind, FieldDescriptor::Kind::PrimeField);
    EXPECT_EQ(p.p, 5u);
    auto f = FieldDescriptor::parse("gf:2^2");
    EXPECT_EQ(f.kind, FieldDescriptor::Kind::FiniteField);
    EXPECT_EQ(f.modulus, (std::vector<std::uint64_t>{1, 1, 1}));
    EXPECT_EQ(f.frob, 1u);
    auto g = FieldDescriptor::parse("gf:3^2:modulus=2,2,1:frob=1");
    EXPECT_EQ(g.modulus, (std::vector<std::uint64_t>{2, 2, 1}));
}

TEST(Descriptor, CanonicalStringRoundTrips) {
    for (const char* d : {"q", "qi", "qx-inv", "gf:7", "gf:2^2:modulus=1,1,1:frob=1", "gf:2^3:modulus=1,1,0,1:frob=2"}) {
        auto x = FieldDescriptor::parse(d);
        EXPECT_EQ(FieldDescriptor::parse(x.to_string()), x) << d;
    }
    EXPECT_EQ(FieldDescriptor::parse("gf:3^2").to_string(), "gf:3^2:modulus=1,0,1:frob=1");
}

TEST(Descriptor, RejectsBadInput) {
    for (const char* d : {"", "r", "gf:", "gf:4", "gf:1", "gf:2^0", "gf:2^2:modulus=1,0,1", "gf:2^2:frob=0",
                          "gf:2^2:modulus=1,1", "gf:3^2:bogus=1", "gf:3^2:modulus=1,0,2"}) {
        try {
            FieldDescriptor::parse(d);
            ADD_FAILURE() << "accepted " << d;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidDescriptor) << d;
        }
    }
}

TEST(Sigma, SpecExamples) {
    auto Fx = make_field("qx-inv");
    EXPECT_EQ(el(Fx, "x+1").sigma(), el(Fx, "(x+1)/x"));
    EXPECT_EQ(el(Fx, "x+1").sigma().to_string(), "(x+1)/x");
    auto Fi = make_field("qi");
    EXPECT_EQ(el(Fi, "2+3i").sigma().to_string(), "2-3i");
    EXPECT_EQ(el(Fi, "i").sigma_inverse(), el(Fi, "-i"));
    auto F4 = make_field("gf:2^2");
    EXPECT_EQ(el(F4, "u").sigma(), el(F4, "u+1"));
    EXPECT_EQ(el(F4, "u+1").sigma_inverse(), el(F4, "u"));
    auto Q = make_field("q");
    EXPECT_EQ(el(Q, "7").sigma_inverse(), el(Q, "7"));
}

TEST(Sigma, IsARingAutomorphismWithInverse) {
    std::mt19937_64 g(11);
    for (const auto& d : shipped_fields()) {
        auto F = make_field(d);
        for (int k = 0; k < 1000; ++k) {
            Element a = any(F, g), b = any(F, g);
            ASSERT_EQ((a + b).sigma(), a.sigma() + b.sigma()) << d;
            ASSERT_EQ((a * b).sigma(), a.sigma() * b.sigma()) << d;
            ASSERT_EQ(a.sigma().sigma_inverse(), a) << d;
            ASSERT_EQ(a.sigma_inverse().sigma(), a) << d;
        }
        EXPECT_TRUE(F->one().sigma().is_one());
    }
}

TEST(Sigma, OrderMatchesIteration) {
    for (const auto& d : shipped_fields()) {
        auto F = make_field(d);
        unsigned r = F->sigma_order();
        Element x = F->descriptor().kind == FieldDescriptor::Kind::Rationals || F->descriptor().kind ==
                                                                                       FieldDescriptor::Kind::PrimeField
                        ? F->from_integer(3)
                        : F->generator();
        Element y = x;
        for (unsigned j = 0; j < r; ++j) y = y.sigma();
        EXPECT_EQ(y, x) << d;
        if (r > 1) EXPECT_NE(x.sigma_power(1), x) << d;
    }
    EXPECT_EQ(make_field("gf:2^3:frob=2")->sigma_order(), 3u);
    EXPECT_EQ(make_field("gf:3^4:frob=2")->sigma_order(), 2u);
}

TEST(Norms, BaseCasesAndRecurrence) {
    std::mt19937_64 g(5);
    for (const auto& d : shipped_fields()) {
        auto F = make_field(d);
        Element a = any(F, g);
        EXPECT_TRUE(norm_N(0, a).is_one());
        EXPECT_EQ(norm_N(1, a), a);
        auto v = norms(8, a);
        for (std::size_t i = 0; i + 1 < v.size(); ++i) EXPECT_EQ(v[i + 1], v[i].sigma() * a);
        auto w = inverse_norms(8, a);
        for (std::size_t i = 0; i + 1 < w.size(); ++i) EXPECT_EQ(w[i + 1], w[i].sigma_inverse() * a);
    }
}

// N_i(a) = a^((p^(in) - 1)/(p^n - 1)) for sigma = Frob^n.
TEST(Norms, FrobeniusClosedForm) {
    for (const char* d : {"gf:2^2", "gf:3^2", "gf:2^3:frob=2", "gf:5^2", "gf:2^4:frob=3"}) {
        auto F = make_field(d);
        const auto& FF = as_finite(F);
        std::uint64_t p = FF.p(), n = FF.frobenius_power();
        for (const auto& a : F->elements()) {
            for (std::size_t i = 0; i <= 5; ++i) {
                std::uint64_t pn = 1, pin = 1;
                for (std::uint64_t t = 0; t < n; ++t) pn *= p;
                for (std::uint64_t t = 0; t < i * n; ++t) pin *= p;
                ASSERT_EQ(norm_N(i, a), a.pow((pin - 1) / (pn - 1))) << d << " a=" << a.to_string() << " i=" << i;
            }
        }
    }
}

// N_i(x+1) = (x+1)^i / x^floor(i/2) in Q(x) with sigma(x) = 1/x.
TEST(Norms, RationalFunctionExample) {
    auto F = make_field("qx-inv");
    Element x = F->generator(), a = x + F->one();
    for (std::size_t i = 0; i <= 10; ++i) EXPECT_EQ(norm_N(i, a), a.pow(i) / x.pow(i / 2)) << i;
}

TEST(Norms, MultiplicativeAndFixedPoints) {
    std::mt19937_64 g(7);
    for (const auto& d : shipped_fields()) {
        auto F = make_field(d);
        for (int k = 0; k < 200; ++k) {
            Element a = any(F, g), b = any(F, g);
            std::size_t i = k % 7;
            ASSERT_EQ(norm_N(i, a * b), norm_N(i, a) * norm_N(i, b)) << d;
        }
        Element c = F->from_integer(3);  // in the prime field, so fixed
        for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(norm_N(i, c), c.pow(i));
    }
}

TEST(Norms, SplitAndConjugateIdentities) {
    std::mt19937_64 g(13);
    for (const auto& d : shipped_fields()) {
        auto F = make_field(d);
        for (int k = 0; k < 300; ++k) {
            Element a = any(F, g), b = any(F, g), z = nonzero(F, g);
            std::size_t i = k % 5, j = (k / 5) % 5;
            ASSERT_EQ(norm_N(i + j, a), norm_N(j, a).sigma_power(static_cast<long long>(i)) * norm_N(i, a));
            ASSERT_EQ(norm_N(i, z.sigma() * b / z), z.sigma_power(static_cast<long long>(i)) * norm_N(i, b) / z);
        }
    }
}

TEST(Conjugacy, Examples) {
    auto F9 = make_field("gf:3^2");
    for (const auto& x : F9->elements()) {
        if (x.is_zero()) {
            EXPECT_THROW(conjugate(F9->one(), x), Error);
            continue;
        }
        EXPECT_EQ(conjugate(F9->one(), x), x * x);
        EXPECT_TRUE(conjugate(F9->zero(), x).is_zero());
    }
    std::mt19937_64 g(3);
    for (const auto& d : shipped_fields()) {
        auto F = make_field(d);
        Element b = any(F, g);
        EXPECT_EQ(conjugate(b, F->one()), b);
    }
    try {
        conjugate(F9->one(), F9->zero());
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroConjugator);
    }
}

TEST(Conjugacy, ComposesAsAnAction) {
    std::mt19937_64 g(17);
    for (const auto& d : shipped_fields()) {
        auto F = make_field(d);
        for (int k = 0; k < 200; ++k) {
            Element b = any(F, g), x = nonzero(F, g), y = nonzero(F, g);
            ASSERT_EQ(conjugate(conjugate(b, x), y), conjugate(b, y * x)) << d;
        }
    }
}

TEST(Conjugacy, ClassPartitions) {
    auto c4 = sigma_conjugacy_classes(make_field("gf:2^2"));
    ASSERT_EQ(c4.size(), 2u);
    EXPECT_EQ(c4[0].size(), 1u);
    EXPECT_EQ(c4[1].size(), 3u);
    auto c9 = sigma_conjugacy_classes(make_field("gf:3^2"));
    ASSERT_EQ(c9.size(), 3u);
    EXPECT_EQ(c9[1].size(), 4u);
    EXPECT_EQ(c9[2].size(), 4u);
    auto c7 = sigma_conjugacy_classes(make_field("gf:7"));
    EXPECT_EQ(c7.size(), 7u);
    for (const auto& c : c7) EXPECT_EQ(c.size(), 1u);
    try {
        sigma_conjugacy_classes(make_field("q"));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InfiniteField);
    }
}

// Classes against orbits computed directly from sigma(x) a / x.
TEST(Conjugacy, BruteForceOrbitsAgree) {
    for (const char* d : {"gf:2^2", "gf:3^2", "gf:2^3:frob=2", "gf:5^2", "gf:2^4:frob=2"}) {
        auto F = make_field(d);
        auto elems = F->elements();
        for (const auto& a : elems) {
            std::vector<Element> orbit;
            for (const auto& x : elems)
                if (!x.is_zero()) orbit.push_back(x.sigma() * a / x);
            std::sort(orbit.begin(), orbit.end());
            orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
            ASSERT_EQ(conjugacy_class(a), orbit) << d;
            for (const auto& b : elems) ASSERT_EQ(are_sigma_conjugate(a, b), std::binary_search(orbit.begin(), orbit.end(), b));
        }
    }
}

TEST(Conjugacy, InfiniteFieldsUseTheNormInvariant) {
    auto Fi = make_field("qi");
    // a ~ b iff |a|^2 = |b|^2 (nonzero): 1 ~ i, 1 !~ 2, 3+4i ~ 5.
    EXPECT_TRUE(are_sigma_conjugate(el(Fi, "1"), el(Fi, "i")));
    EXPECT_FALSE(are_sigma_conjugate(el(Fi, "1"), el(Fi, "2")));
    EXPECT_TRUE(are_sigma_conjugate(el(Fi, "3+4i"), el(Fi, "5")));
    EXPECT_FALSE(are_sigma_conjugate(el(Fi, "0"), el(Fi, "1")));
    EXPECT_TRUE(are_sigma_conjugate(el(Fi, "0"), el(Fi, "0")));
    std::mt19937_64 g(19);
    for (const char* d : {"q", "qi", "qx-inv"}) {
        auto F = make_field(d);
        for (int k = 0; k < 100; ++k) {
            Element b = nonzero(F, g), x = nonzero(F, g);
            ASSERT_TRUE(are_sigma_conjugate(b, conjugate(b, x))) << d;
        }
    }
    auto Q = make_field("q");
    EXPECT_FALSE(are_sigma_conjugate(el(Q, "2"), el(Q, "3")));
}

TEST(Elements, CanonicalOrderIsIndexOrder) {
    for (const char* d : {"gf:2^2", "gf:3^2", "gf:7", "gf:2^3:frob=2"}) {
        auto F = make_field(d);
        auto e = F->elements();
        EXPECT_TRUE(std::is_sorted(e.begin(), e.end())) << d;
        EXPECT_EQ(e.size(), *F->size());
        EXPECT_TRUE(e.front().is_zero());
    }
}

TEST(Elements, PrintParseRoundTrip) {
    std::mt19937_64 g(23);
    for (const auto& d : shipped_fields()) {
        auto F = make_field(d);
        for (int k = 0; k < 1000; ++k) {
            Element a = any(F, g);
            ASSERT_EQ(parse_element(F, a.to_string()), a) << d << " " << a.to_string();
        }
    }
}

TEST(Elements, FieldMismatchAndDivisionByZero) {
    auto A = make_field("gf:5"), B = make_field("gf:7");
    try {
        (void)(A->one() + B->one());
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
    }
    try {
        (void)A->zero().inverse();
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
    // Separately constructed copies of one descriptor are the same field.
    EXPECT_EQ(make_field("gf:3^2")->one() + make_field("gf:3^2")->one(), make_field("gf:3^2")->from_integer(2));
}

TEST(Elements, GaussianAndRationalFunctionPrinting) {
    auto Fi = make_field("qi");
    EXPECT_EQ(el(Fi, "1/2+3/4*i").to_string(), "1/2+3/4*i");
    EXPECT_EQ(el(Fi, "-i").to_string(), "-i");
    EXPECT_EQ(el(Fi, "3i").to_string(), "3i");
    auto Fx = make_field("qx-inv");
    EXPECT_EQ(el(Fx, "1/x").to_string(), "1/x");
    EXPECT_EQ(el(Fx, "(x+1)/(x^2+1)").to_string(), "(x+1)/(x^2+1)");
    EXPECT_EQ(el(Fx, "(2*x+2)/(2*x)").to_string(), "(x+1)/x");
}

}  // namespace
}  // namespace skew
