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

#include "skew/selftest.hpp"

#include <functional>

#include "skew/sigma_field.hpp"

namespace skew {

std::vector<std::string> default_selftest_fields() {
    return {"q", "qi", "qx-inv", "gf:7", "gf:2^2", "gf:3^2", "gf:2^3:frob=2"};
}

SkewPolynomial random_polynomial(const FieldPtr& field, std::size_t max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::size_t d = deg(rng);
    std::vector<Element> c;
    for (std::size_t i = 0; i <= d; ++i) c.push_back(field->random(rng));
    return SkewPolynomial(field, std::move(c));
}

namespace {

using Check = std::function<std::string(const FieldPtr&, std::mt19937_64&)>;

std::string fail(const std::string& what) { return what.empty() ? "failed" : what; }

std::string check_norm_split(const FieldPtr& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> idx(0, 5);
    Element a = F->random(rng);
    std::size_t i = idx(rng), j = idx(rng);
    if (norm_N(i + j, a) == norm_N(j, a).sigma_power(static_cast<long long>(i)) * norm_N(i, a)) return {};
    return fail("N_{i+j} split at a = " + a.to_string() + ", i = " + std::to_string(i) + ", j = " + std::to_string(j));
}

std::string check_norm_conjugate(const FieldPtr& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> idx(0, 6);
    Element a = F->random_nonzero(rng), b = F->random(rng);
    std::size_t i = idx(rng);
    Element lhs = norm_N(i, a.sigma() * b / a);
    Element rhs = a.sigma_power(static_cast<long long>(i)) * norm_N(i, b) / a;
    if (lhs == rhs) return {};
    return fail("conjugate norm at a = " + a.to_string() + ", b = " + b.to_string());
}

std::string check_product_formula(const FieldPtr& F, std::mt19937_64& rng) {
    std::size_t cap = F->descriptor().kind == FieldDescriptor::Kind::RationalFunctions ? 2 : 4;
    SkewPolynomial P = random_polynomial(F, cap, rng), Q = random_polynomial(F, cap, rng);
    Element a = F->random(rng);
    Element qa = eval_right(Q, a);
    Element expect = qa.is_zero() ? F->zero() : eval_right(P, conjugate(a, qa)) * qa;
    if (eval_right(P * Q, a) == expect) return {};
    return fail("product formula for P = " + P.to_string() + ", Q = " + Q.to_string() + ", a = " + a.to_string());
}

std::string check_eval_remainder(const FieldPtr& F, std::mt19937_64& rng) {
    SkewPolynomial P = random_polynomial(F, 5, rng);
    Element a = F->random(rng);
    DivMod r = right_divmod(P, SkewPolynomial::linear(a));
    DivMod l = left_divmod(P, SkewPolynomial::linear(a));
    if (r.remainder == SkewPolynomial::constant(eval_right(P, a)) &&
        l.remainder == SkewPolynomial::constant(eval_left(P, a)))
        return {};
    return fail("evaluation is not the remainder for P = " + P.to_string() + ", a = " + a.to_string());
}

std::string check_division(const FieldPtr& F, std::mt19937_64& rng, bool right) {
    SkewPolynomial P = random_polynomial(F, 6, rng), D = random_polynomial(F, 3, rng);
    if (D.is_zero()) D = SkewPolynomial::constant(F->random_nonzero(rng));
    DivMod dm = right ? right_divmod(P, D) : left_divmod(P, D);
    SkewPolynomial back = right ? dm.quotient * D + dm.remainder : D * dm.quotient + dm.remainder;
    if (back == P && dm.remainder.degree() < D.degree()) return {};
    return fail(std::string(right ? "right" : "left") + " division of " + P.to_string() + " by " + D.to_string());
}

}  // namespace

std::vector<SelftestResult> run_selftest(const std::vector<std::string>& fields, std::size_t cases,
                                         std::uint64_t seed) {
    const std::vector<std::pair<std::string, Check>> checks = {
        {"norm_split", check_norm_split},
        {"norm_of_conjugate", check_norm_conjugate},
        {"product_formula", check_product_formula},
        {"eval_is_remainder", check_eval_remainder},
        {"right_division", [](const FieldPtr& F, std::mt19937_64& g) { return check_division(F, g, true); }},
        {"left_division", [](const FieldPtr& F, std::mt19937_64& g) { return check_division(F, g, false); }},
    };
    std::vector<SelftestResult> out;
    for (const auto& desc : fields) {
        FieldPtr F = make_field(desc);
        for (std::size_t k = 0; k < checks.size(); ++k) {
            std::mt19937_64 rng(seed * 1000003 + k);
            SelftestResult r{F->name(), checks[k].first, cases, 0, {}};
            for (std::size_t c = 0; c < cases; ++c) {
                std::string msg = checks[k].second(F, rng);
                if (!msg.empty()) {
                    if (r.failures++ == 0) r.first_failure = msg;
                }
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace skew
