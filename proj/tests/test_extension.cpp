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

#include "skew/extension.hpp"
#include "skew/parse.hpp"
#include "skew/sigma_field.hpp"
#include "test_util.hpp"

namespace skew {
namespace {

SkewPolynomial P_(const FieldPtr& F, const char* s) { return parse_polynomial(F, s); }

template <class F>
void expect_code(ErrorCode code, F&& f) {
    try {
        f();
        ADD_FAILURE() << "no error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

VnElement vn(const FieldPtr& F, std::vector<long long> d) {
    VnElement y;
    for (auto x : d) y.d.push_back(F->from_integer(x));
    return y;
}

VnElement random_vn(const FieldPtr& F, std::size_t n, std::mt19937_64& g) {
    VnElement y;
    for (std::size_t j = 0; j <= n; ++j) y.d.push_back(F->random(g));
    return y;
}

// Monic of degree m with nonzero constant term.
SkewPolynomial random_kp(const FieldPtr& F, std::size_t m, std::mt19937_64& g) {
    auto P = testing::poly_of_degree(F, m, g, true);
    auto c = P.coefficients();
    c[0] = F->random_nonzero(g);
    return SkewPolynomial(F, c);
}

MultiRational mr(const MultiPoly& p) { return MultiRational(p); }
MultiRational mr(const VnElement& y) { return MultiRational(y.to_multipoly()); }

TEST(LMap, Example) {
    auto Q = make_field("q");
    auto P = P_(Q, "T^2 - 1");
    EXPECT_EQ(kp_constants(P).size(), 2u);
    // V_1 = {d_0 + d_1 y_0}; L(y_0) = 1 and L(1) = y_0.
    EXPECT_EQ(l_map(vn(Q, {0, 1}), P), vn(Q, {1, 0}));
    EXPECT_EQ(l_map(vn(Q, {1, 0}), P), vn(Q, {0, 1}));
    EXPECT_TRUE(l_map(vn(Q, {0, 0}), P).is_zero());
    expect_code(ErrorCode::DegreeMismatch, [&] { (void)l_map(vn(Q, {1, 0, 0}), P); });
}

TEST(LMap, Injective) {
    std::mt19937_64 g(1);
    for (const char* d : {"q", "gf:5", "gf:3^2", "qi"}) {
        auto F = make_field(d);
        for (int k = 0; k < 200; ++k) {
            auto P = random_kp(F, 1 + g() % 3, g);
            auto Y = random_vn(F, P.degree().value() - 1, g);
            EXPECT_EQ(l_map(Y, P).is_zero(), Y.is_zero()) << d;
        }
    }
}

TEST(Guards, Rejections) {
    auto Q = make_field("q");
    expect_code(ErrorCode::ZeroConstantTerm, [&] { (void)kp_constants(P_(Q, "T^2 + T")); });
    expect_code(ErrorCode::NotMonic, [&] { (void)kp_constants(P_(Q, "2*T^2 - 1")); });
    expect_code(ErrorCode::DegreeCapExceeded, [&] { (void)kp_constants(P_(Q, "T^5 - 1")); });
    expect_code(ErrorCode::DegreeMismatch, [&] { (void)kp_constants(P_(Q, "1")); });
    EXPECT_EQ(kp_constants(P_(Q, "T^5 - 1"), ExtensionOptions{5}).size(), 5u);
    expect_code(ErrorCode::DegreeCapExceeded, [&] { (void)verify_root_in_KP(P_(Q, "T^5 - 1")); });
}

TEST(Phi, Examples) {
    auto Q = make_field("q");
    auto P3 = P_(Q, "T^3 - 2*T + 5");
    EXPECT_EQ(phi_apply(MultiPoly::variable(Q, 2, 0), P3), mr(MultiPoly::variable(Q, 2, 1)));
    auto P = P_(Q, "T^2 - 1");
    auto y0 = MultiPoly::variable(Q, 1, 0);
    // sigma_P(y_0) = 1/y_0
    MultiRational want(MultiPoly::constant(Q->one(), 1), {vn(Q, {0, 1})});
    EXPECT_EQ(phi_apply(y0, P), want);
    EXPECT_EQ(sigma_P_apply(mr(y0), P), want);
}

TEST(Phi, Multiplicative) {
    std::mt19937_64 g(2);
    for (const char* d : {"q", "gf:5", "gf:3^2", "qi"}) {
        auto F = make_field(d);
        for (int k = 0; k < 50; ++k) {
            auto P = random_kp(F, 1 + g() % 3, g);
            std::size_t n = P.degree().value() - 1;
            auto a = random_multirational(F, n, g).numerator();
            auto b = random_multirational(F, n, g).numerator();
            EXPECT_EQ(phi_apply(a * b, P), phi_apply(a, P) * phi_apply(b, P)) << d;
            EXPECT_EQ(phi_apply(a + b, P), phi_apply(a, P) + phi_apply(b, P)) << d;
        }
    }
}

TEST(SigmaP, ConstantsAndProductOfGenerators) {
    std::mt19937_64 g(3);
    for (const char* d : {"qi", "gf:3^2", "qx-inv"}) {
        auto F = make_field(d);
        auto P = random_kp(F, 2, g);
        Element c = F->random(g);
        EXPECT_EQ(sigma_P_apply(mr(MultiPoly::constant(c, 1)), P), mr(MultiPoly::constant(c.sigma(), 1))) << d;
    }
    for (const char* d : {"q", "gf:5", "gf:3^2"}) {
        auto F = make_field(d);
        for (std::size_t m = 2; m <= 4; ++m) {
            auto P = random_kp(F, m, g);
            std::size_t n = m - 1;
            VnElement ystar;
            ystar.d.assign(n + 1, F->zero());
            ystar.d[n] = F->one();
            VnElement y0;
            y0.d.assign(n + 1, F->zero());
            y0.d[1] = F->one();
            EXPECT_EQ(sigma_P_apply(mr(ystar), P), MultiRational(l_map(ystar, P).to_multipoly(), {y0})) << d;
        }
    }
}

TEST(SigmaP, Injective) {
    std::mt19937_64 g(4);
    for (const char* d : {"q", "gf:5", "gf:3^2"}) {
        auto F = make_field(d);
        for (int k = 0; k < 60; ++k) {
            auto P = random_kp(F, 1 + g() % 3, g);
            auto x = random_multirational(F, P.degree().value() - 1, g);
            EXPECT_EQ(sigma_P_apply(x, P).is_zero(), x.is_zero());
        }
    }
}

TEST(SigmaP, PowersOfL) {
    // L^i(Y) = y_0 sigma_P(y_0) ... sigma_P^(i-1)(y_0) sigma_P^i(Y)
    std::mt19937_64 g(5);
    for (const char* d : {"q", "gf:5", "gf:3^2"}) {
        auto F = make_field(d);
        for (int k = 0; k < 10; ++k) {
            auto P = random_kp(F, 2 + g() % 2, g);
            std::size_t n = P.degree().value() - 1;
            auto Y = random_vn(F, n, g);
            MultiRational y0(MultiPoly::variable(F, n, 0));
            VnElement Li = Y;
            MultiRational prefix(MultiPoly::constant(F->one(), n)), shift_y0 = y0, shift_Y = mr(Y);
            for (int i = 1; i <= 3; ++i) {
                Li = l_map(Li, P);
                prefix = prefix * shift_y0;
                shift_y0 = sigma_P_apply(shift_y0, P);
                shift_Y = sigma_P_apply(shift_Y, P);
                EXPECT_EQ(mr(Li), prefix * shift_Y) << d << " i=" << i;
            }
        }
    }
}

TEST(RootInKP, Example) {
    auto Q = make_field("q");
    auto v = verify_root_in_KP(P_(Q, "T^2 - 1"));
    EXPECT_TRUE(v.root);
    EXPECT_TRUE(v.minimal);
    EXPECT_EQ(v.norms, (std::vector<std::string>{"1", "y0", "1"}));
    EXPECT_EQ(v.value, "0");
    ASSERT_EQ(v.sigma_table.size(), 1u);
}

TEST(RootInKP, BaseCase) {
    auto F = make_field("gf:5");
    auto v = verify_root_in_KP(P_(F, "T - 3"));
    EXPECT_TRUE(v.root);
    EXPECT_TRUE(v.minimal);
}

TEST(RootInKP, RandomPolynomials) {
    std::mt19937_64 g(6);
    for (const char* d : {"q", "gf:5", "gf:3^2"}) {
        auto F = make_field(d);
        for (std::size_t m = 1; m <= 3; ++m)
            for (int k = 0; k < 5; ++k) {
                auto P = random_kp(F, m, g);
                auto v = verify_root_in_KP(P);
                EXPECT_TRUE(v.root) << d << " " << P.to_string();
                EXPECT_TRUE(v.minimal) << d << " " << P.to_string();
                EXPECT_EQ(v.norms.size(), m + 1);
            }
    }
}

TEST(Psi, GaussianAndFunctionFieldModels) {
    auto Q = make_field("q");
    auto P = P_(Q, "T^2 - 1");
    auto Qi = make_field("qi");
    auto rep = psi_a_check(P, Qi->generator(), make_embedding(Q, Qi), 60, 7);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.samples, 60u);
    auto Qx = make_field("qx-inv");
    EXPECT_TRUE(psi_a_check(P, Qx->generator(), make_embedding(Q, Qx), 40, 8).ok());
    // psi_i(y_0) = i and psi_i(sigma_P(y_0)) = -i
    MultiRational y0(MultiPoly::variable(Q, 1, 0));
    auto e = make_embedding(Q, Qi);
    EXPECT_EQ(psi_apply(y0, Qi->generator(), e), Qi->generator());
    EXPECT_EQ(psi_apply(sigma_P_apply(y0, P), Qi->generator(), e), -Qi->generator());
}

TEST(Psi, RejectsNonMinimalRoots) {
    auto Q = make_field("q");
    auto Qi = make_field("qi");
    auto e = make_embedding(Q, Qi);
    auto P = P_(Q, "T^2 - 1");
    // 1 is a root of T^2 - 1 but already of T - 1.
    expect_code(ErrorCode::NotMinimal, [&] { (void)psi_a_check(P, Qi->one(), e); });
    // 2 is not a root at all.
    expect_code(ErrorCode::NotMinimal, [&] { (void)psi_a_check(P, Qi->from_integer(2), e); });
    MultiRational bad(MultiPoly::constant(Q->one(), 1), {vn(Q, {-1, 1})});  // 1/(y_0 - 1)
    expect_code(ErrorCode::NotMinimal, [&] { (void)psi_apply(bad, Qi->one(), e); });
}

TEST(MultiRational, DenominatorsMustBeNonzero) {
    auto Q = make_field("q");
    expect_code(ErrorCode::DenominatorNotInS,
                [&] { (void)MultiRational(MultiPoly::constant(Q->one(), 1), {vn(Q, {0, 0})}); });
}

}  // namespace
}  // namespace skew
