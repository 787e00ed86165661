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

#include "field_impl.hpp"

namespace skew::detail {

Rational random_small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

namespace {

// Q with sigma = id.
class Rationals final : public SigmaField {
   public:
    Rationals() : SigmaField(FieldDescriptor{}) {}

    std::string_view generator_symbol() const noexcept override { return ""; }
    bool is_finite() const noexcept override { return false; }
    std::uint64_t characteristic() const noexcept override { return 0; }
    unsigned sigma_order() const noexcept override { return 1; }

   protected:
    static const Rational& v(const Payload& a) { return std::get<Rational>(a); }

    Payload p_from_integer(const Integer& n) const override { return Rational(n); }
    Payload p_generator() const override { throw Error(ErrorCode::Unsupported, "Q has no generator symbol"); }
    Payload p_random(std::mt19937_64& rng) const override { return random_small_rational(rng); }
    Payload p_add(const Payload& a, const Payload& b) const override { return Rational(v(a) + v(b)); }
    Payload p_sub(const Payload& a, const Payload& b) const override { return Rational(v(a) - v(b)); }
    Payload p_neg(const Payload& a) const override { return Rational(-v(a)); }
    Payload p_mul(const Payload& a, const Payload& b) const override { return Rational(v(a) * v(b)); }
    Payload p_inv(const Payload& a) const override { return Rational(1 / v(a)); }
    Payload p_sigma(const Payload& a) const override { return a; }
    Payload p_sigma_inverse(const Payload& a) const override { return a; }
    bool p_is_zero(const Payload& a) const override { return sgn(v(a)) == 0; }
    bool p_equal(const Payload& a, const Payload& b) const override { return v(a) == v(b); }
    std::strong_ordering p_compare(const Payload& a, const Payload& b) const override {
        int c = cmp(v(a), v(b));
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    std::string p_to_string(const Payload& a) const override { return v(a).get_str(); }
};

}  // namespace

FieldPtr make_rationals() { return std::make_shared<Rationals>(); }

}  // namespace skew::detail
