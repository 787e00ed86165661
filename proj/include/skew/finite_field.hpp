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

#ifndef SKEW_FINITE_FIELD_HPP
#define SKEW_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

#include "skew/field.hpp"

namespace skew {

namespace finite {

// Dense polynomials over F_p, ascending coefficients, no trailing zeros.
using ModPoly = std::vector<std::uint64_t>;

ModPoly make_monic(std::uint64_t p, ModPoly f);
bool is_irreducible(std::uint64_t p, const ModPoly& f);  // f monic of degree >= 1
// Smallest monic irreducible of degree k, ordered by the integer sum c_j p^j of its lower coefficients.
ModPoly smallest_irreducible(std::uint64_t p, unsigned k);

}  // namespace finite

/*
   F_{p^k} = F_p[u]/(modulus) with sigma(a) = a^(p^frob). Elements are indexed by
   sum c_j p^j where a = sum c_j u^j, and the index order is the canonical order.
*/
class FiniteSigmaField final : public SigmaField {
   public:
    explicit FiniteSigmaField(FieldDescriptor descriptor);

    std::uint64_t p() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }
    unsigned frobenius_power() const noexcept { return n_; }
    std::uint64_t order() const noexcept { return q_; }
    const finite::ModPoly& modulus() const noexcept { return modulus_; }

    // |F| for the fixed field F = F_{p^gcd(n,k)}.
    std::uint64_t fixed_field_size() const noexcept;

    std::uint64_t index_of(const Element& a) const;
    std::vector<std::uint64_t> coordinates(const Element& a) const;  // length k, coefficient of u^j at j
    Element from_coordinates(const std::vector<std::uint64_t>& c) const;
    Element frobenius(const Element& a, unsigned j) const;  // a^(p^j)

    std::string_view generator_symbol() const noexcept override;
    bool is_finite() const noexcept override { return true; }
    std::optional<std::uint64_t> size() const noexcept override { return q_; }
    std::uint64_t characteristic() const noexcept override { return p_; }
    unsigned sigma_order() const noexcept override { return sigma_order_; }

   protected:
    Payload p_from_integer(const Integer& n) const override;
    Payload p_generator() const override;
    Payload p_random(std::mt19937_64& rng) const override;
    Payload p_add(const Payload& a, const Payload& b) const override;
    Payload p_sub(const Payload& a, const Payload& b) const override;
    Payload p_neg(const Payload& a) const override;
    Payload p_mul(const Payload& a, const Payload& b) const override;
    Payload p_inv(const Payload& a) const override;
    Payload p_sigma(const Payload& a) const override;
    Payload p_sigma_inverse(const Payload& a) const override;
    bool p_is_zero(const Payload& a) const override;
    bool p_equal(const Payload& a, const Payload& b) const override;
    std::strong_ordering p_compare(const Payload& a, const Payload& b) const override;
    std::string p_to_string(const Payload& a) const override;
    Payload p_element_at(std::uint64_t index) const override;

   private:
    using Digits = std::vector<std::uint64_t>;

    Digits digits(std::uint64_t x) const;
    std::uint64_t encode(const Digits& d) const;
    std::uint64_t add_raw(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg_raw(std::uint64_t a) const;
    std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow_slow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t frob_raw(std::uint64_t a, unsigned j) const;
    void build_tables();

    std::uint64_t p_;
    unsigned k_;
    unsigned n_;
    std::uint64_t q_;
    finite::ModPoly modulus_;
    unsigned sigma_order_;
    std::vector<std::uint64_t> pow_p_;  // p^j for j <= k

    bool tables_ = false;
    std::vector<std::uint32_t> log_;  // log_[x] for x != 0
    std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, i < q - 1
};

// Throws InfiniteField for infinite fields.
const FiniteSigmaField& as_finite(const FieldPtr& field);

}  // namespace skew

#endif
