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

#ifndef SKEW_FIELD_HPP
#define SKEW_FIELD_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "skew/error.hpp"

namespace skew {

using Rational = mpq_class;
using Integer = mpz_class;

struct GaussianValue {
    Rational re, im;
};

// num/den with ascending coefficients, gcd(num, den) = 1 and den monic.
struct RatFuncValue {
    std::vector<Rational> num, den;
};

using Payload = std::variant<std::uint64_t, Rational, GaussianValue, RatFuncValue>;

/* descriptors */

struct FieldDescriptor {
    enum class Kind { Rationals, GaussianRationals, RationalFunctions, PrimeField, FiniteField };

    Kind kind = Kind::Rationals;
    std::uint64_t p = 0;
    unsigned k = 1;
    std::vector<std::uint64_t> modulus;  // ascending, monic, length k + 1 (FiniteField only)
    unsigned frob = 1;

    // q | qi | qx-inv | gf:p | gf:p^k[:modulus=c0,...,ck][:frob=n]
    static FieldDescriptor parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

class SigmaField;
class Element;
using FieldPtr = std::shared_ptr<const SigmaField>;

FieldPtr make_field(std::string_view descriptor);
FieldPtr make_field(const FieldDescriptor& descriptor);

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;
void require_same_field(const FieldPtr& a, const FieldPtr& b);

/* an immutable field K together with an automorphism sigma */

class SigmaField : public std::enable_shared_from_this<SigmaField> {
   public:
    explicit SigmaField(FieldDescriptor descriptor);
    virtual ~SigmaField() = default;
    SigmaField(const SigmaField&) = delete;
    SigmaField& operator=(const SigmaField&) = delete;

    const FieldDescriptor& descriptor() const noexcept { return descriptor_; }
    const std::string& name() const noexcept { return name_; }

    Element zero() const;
    Element one() const;
    Element from_integer(long long n) const;
    Element from_integer(const Integer& n) const;
    Element generator() const;  // u, i or x; throws Unsupported where there is none
    Element random(std::mt19937_64& rng) const;
    Element random_nonzero(std::mt19937_64& rng) const;

    virtual std::string_view generator_symbol() const noexcept = 0;  // empty when absent
    virtual bool is_finite() const noexcept = 0;
    virtual std::optional<std::uint64_t> size() const noexcept { return std::nullopt; }
    virtual std::uint64_t characteristic() const noexcept = 0;
    virtual unsigned sigma_order() const noexcept = 0;
    bool sigma_is_identity() const noexcept { return sigma_order() == 1; }

    // Finite fields only, in canonical (index) order.
    std::vector<Element> elements() const;
    Element element_at(std::uint64_t index) const;

   protected:
    friend class Element;
    friend bool operator==(const Element& a, const Element& b);
    friend std::strong_ordering operator<=>(const Element& a, const Element& b);

    virtual Payload p_from_integer(const Integer& n) const = 0;
    virtual Payload p_generator() const = 0;
    virtual Payload p_random(std::mt19937_64& rng) const = 0;
    virtual Payload p_add(const Payload& a, const Payload& b) const = 0;
    virtual Payload p_sub(const Payload& a, const Payload& b) const = 0;
    virtual Payload p_neg(const Payload& a) const = 0;
    virtual Payload p_mul(const Payload& a, const Payload& b) const = 0;
    virtual Payload p_inv(const Payload& a) const = 0;  // a != 0
    virtual Payload p_sigma(const Payload& a) const = 0;
    virtual Payload p_sigma_inverse(const Payload& a) const = 0;
    virtual bool p_is_zero(const Payload& a) const = 0;
    virtual bool p_equal(const Payload& a, const Payload& b) const = 0;
    virtual std::strong_ordering p_compare(const Payload& a, const Payload& b) const = 0;
    virtual std::string p_to_string(const Payload& a) const = 0;
    virtual Payload p_element_at(std::uint64_t index) const;

    Element wrap(Payload value) const;

   private:
    FieldDescriptor descriptor_;
    std::string name_;
};

/* field elements carry their field */

class Element {
   public:
    Element() = default;
    Element(FieldPtr field, Payload value) : field_(std::move(field)), value_(std::move(value)) {}

    bool valid() const noexcept { return field_ != nullptr; }
    const FieldPtr& field() const noexcept { return field_; }
    const Payload& payload() const noexcept { return value_; }

    bool is_zero() const;
    bool is_one() const;

    Element operator+(const Element& other) const;
    Element operator-(const Element& other) const;
    Element operator*(const Element& other) const;
    Element operator/(const Element& other) const;
    Element operator-() const;
    Element& operator+=(const Element& other) { return *this = *this + other; }
    Element& operator-=(const Element& other) { return *this = *this - other; }
    Element& operator*=(const Element& other) { return *this = *this * other; }

    Element inverse() const;
    Element sigma() const;
    Element sigma_inverse() const;
    Element sigma_power(long long j) const;  // sigma^j, negative j allowed
    Element pow(std::uint64_t e) const;

    std::string to_string() const;

    friend bool operator==(const Element& a, const Element& b);
    // Total order inside one field, lexicographic on the canonical representation.
    friend std::strong_ordering operator<=>(const Element& a, const Element& b);

   private:
    const SigmaField& checked() const;
    FieldPtr field_;
    Payload value_ = std::uint64_t{0};
};

}  // namespace skew

#endif
