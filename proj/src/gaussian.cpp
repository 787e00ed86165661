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

namespace {

std::strong_ordering order(const Rational& a, const Rational& b) {
    int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

// Q(i) with sigma = complex conjugation.
class GaussianRationals final : public SigmaField {
   public:
    GaussianRationals() : SigmaField(FieldDescriptor::parse("qi")) {}

    std::string_view generator_symbol() const noexcept override { return "i"; }
    bool is_finite() const noexcept override { return false; }
    std::uint64_t characteristic() const noexcept override { return 0; }
    unsigned sigma_order() const noexcept override { return 2; }

   protected:
    static const GaussianValue& v(const Payload& a) { return std::get<GaussianValue>(a); }

    Payload p_from_integer(const Integer& n) const override { return GaussianValue{Rational(n), Rational(0)}; }
    Payload p_generator() const override { return GaussianValue{Rational(0), Rational(1)}; }
    Payload p_random(std::mt19937_64& rng) const override {
        return GaussianValue{random_small_rational(rng), random_small_rational(rng)};
    }
    Payload p_add(const Payload& a, const Payload& b) const override {
        return GaussianValue{v(a).re + v(b).re, v(a).im + v(b).im};
    }
    Payload p_sub(const Payload& a, const Payload& b) const override {
        return GaussianValue{v(a).re - v(b).re, v(a).im - v(b).im};
    }
    Payload p_neg(const Payload& a) const override { return GaussianValue{-v(a).re, -v(a).im}; }
    Payload p_mul(const Payload& a, const Payload& b) const override {
        const auto &x = v(a), &y = v(b);
        return GaussianValue{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    Payload p_inv(const Payload& a) const override {
        const auto& x = v(a);
        Rational n = x.re * x.re + x.im * x.im;
        return GaussianValue{x.re / n, -x.im / n};
    }
    Payload p_sigma(const Payload& a) const override { return GaussianValue{v(a).re, -v(a).im}; }
    Payload p_sigma_inverse(const Payload& a) const override { return p_sigma(a); }
    bool p_is_zero(const Payload& a) const override { return sgn(v(a).re) == 0 && sgn(v(a).im) == 0; }
    bool p_equal(const Payload& a, const Payload& b) const override {
        return v(a).re == v(b).re && v(a).im == v(b).im;
    }
    std::strong_ordering p_compare(const Payload& a, const Payload& b) const override {
        auto c = order(v(a).re, v(b).re);
        return c != 0 ? c : order(v(a).im, v(b).im);
    }

    // 2-3i, 1/2+3/4*i, -i
    std::string p_to_string(const Payload& a) const override {
        const auto& x = v(a);
        if (sgn(x.im) == 0) return x.re.get_str();
        std::string im;
        Rational mag = abs(x.im);
        if (mag == 1)
            im = "i";
        else if (mag.get_den() == 1)
            im = mag.get_str() + "i";
        else
            im = mag.get_str() + "*i";
        std::string sign = sgn(x.im) < 0 ? "-" : "+";
        if (sgn(x.re) == 0) return (sgn(x.im) < 0 ? "-" : "") + im;
        return x.re.get_str() + sign + im;
    }
};

}  // namespace

FieldPtr make_gaussian_rationals() { return std::make_shared<GaussianRationals>(); }

}  // namespace skew::detail
