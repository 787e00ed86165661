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

#ifndef SKEW_SKEW_POLY_HPP
#define SKEW_SKEW_POLY_HPP

#include <compare>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "skew/field.hpp"

namespace skew {

// Polynomial degree with deg 0 = -infinity.
class Degree {
   public:
    constexpr Degree() = default;  // -infinity
    constexpr explicit Degree(std::size_t d) : d_(static_cast<long long>(d)) {}
    static constexpr Degree minus_infinity() { return Degree(); }

    constexpr bool is_minus_infinity() const noexcept { return d_ == kMinusInf; }
    std::size_t value() const;  // throws for -infinity

    friend constexpr auto operator<=>(Degree, Degree) = default;
    friend constexpr bool operator==(Degree, Degree) = default;
    friend constexpr Degree operator+(Degree a, Degree b) {
        if (a.is_minus_infinity() || b.is_minus_infinity()) return Degree();
        return Degree(static_cast<std::size_t>(a.d_ + b.d_));
    }
    friend constexpr bool operator==(Degree a, std::size_t d) { return a.d_ == static_cast<long long>(d); }

    std::string to_string() const;

   private:
    static constexpr long long kMinusInf = std::numeric_limits<long long>::min();
    long long d_ = kMinusInf;
};

/*
   Elements sum a_i T^i of K[T; sigma] with left coefficients, T a = sigma(a) T.
   Coefficients are ascending and carry no trailing zeros, so zero is the empty vector.
*/
class SkewPolynomial {
   public:
    explicit SkewPolynomial(FieldPtr field);
    SkewPolynomial(FieldPtr field, std::vector<Element> coefficients);

    static SkewPolynomial constant(const Element& c);
    static SkewPolynomial monomial(const Element& c, std::size_t k);  // c T^k
    static SkewPolynomial T(const FieldPtr& field);
    static SkewPolynomial linear(const Element& a);  // T - a

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Element>& coefficients() const noexcept { return c_; }
    Element coefficient(std::size_t i) const;
    Degree degree() const noexcept { return c_.empty() ? Degree() : Degree(c_.size() - 1); }
    std::size_t size() const noexcept { return c_.size(); }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const;
    Element leading_coefficient() const;  // throws for zero

    // Lowest exponent with a nonzero coefficient; throws for zero.
    std::size_t valuation() const;

    SkewPolynomial operator+(const SkewPolynomial& o) const;
    SkewPolynomial operator-(const SkewPolynomial& o) const;
    SkewPolynomial operator-() const;
    SkewPolynomial operator*(const SkewPolynomial& o) const;
    SkewPolynomial& operator+=(const SkewPolynomial& o) { return *this = *this + o; }
    SkewPolynomial& operator-=(const SkewPolynomial& o) { return *this = *this - o; }

    SkewPolynomial scaled_left(const Element& c) const;   // c P
    SkewPolynomial scaled_right(const Element& c) const;  // P c
    SkewPolynomial shifted(std::size_t k) const;          // P T^k

    // Left scaling to a monic polynomial (generator of the same left ideal).
    SkewPolynomial monic() const;
    // Right scaling to a monic polynomial (generator of the same right ideal).
    SkewPolynomial monic_right() const;

    std::string to_string() const;

    friend bool operator==(const SkewPolynomial& a, const SkewPolynomial& b);

   private:
    void trim();
    FieldPtr field_;
    std::vector<Element> c_;
};

/* evaluation */

// P(a) = sum a_i N_i(a), the remainder of P on right division by T - a.
Element eval_right(const SkewPolynomial& P, const Element& a);
// P_l(a) = sum sigma^-i(a_i) N_{-i}(a), the remainder of P on left division by T - a.
Element eval_left(const SkewPolynomial& P, const Element& a);

/* division */

struct DivMod {
    SkewPolynomial quotient, remainder;
};

// P = Q D + R with deg R < deg D.
DivMod right_divmod(const SkewPolynomial& P, const SkewPolynomial& D);
// P = D Q + R with deg R < deg D.
DivMod left_divmod(const SkewPolynomial& P, const SkewPolynomial& D);

/* right-coefficient form P = sum T^i b_i */

std::vector<Element> to_right_form(const SkewPolynomial& P);
SkewPolynomial from_right_form(const FieldPtr& field, const std::vector<Element>& b);

/* gcd and lcm */

// G = U P + V Q with G monic.
struct Bezout {
    SkewPolynomial gcd, u, v;
};

Bezout gcrd(const SkewPolynomial& P, const SkewPolynomial& Q);
// Monic M = U P = V Q of least degree; zero if either input is zero.
SkewPolynomial lclm(const SkewPolynomial& P, const SkewPolynomial& Q);
// Right-ideal counterparts: G = P U + Q V and M = P U = Q V.
Bezout gcld(const SkewPolynomial& P, const SkewPolynomial& Q);
SkewPolynomial lcrm(const SkewPolynomial& P, const SkewPolynomial& Q);

// Cofactors of lclm/lcrm: lclm(P, Q) = left_p P = left_q Q.
struct CommonMultiple {
    SkewPolynomial multiple, cofactor_p, cofactor_q;
};
CommonMultiple lclm_with_cofactors(const SkewPolynomial& P, const SkewPolynomial& Q);
// lcrm(P, Q) = P cofactor_p = Q cofactor_q.
CommonMultiple lcrm_with_cofactors(const SkewPolynomial& P, const SkewPolynomial& Q);

/* anti-automorphisms */

struct Alpha0 {
    enum class Kind {
        Identity,
        Sigma,      // alpha0 = sigma: complex conjugation on qi, x -> 1/x on qx-inv
        Frobenius,  // a -> a^(p^power) on a finite field
    };
    Kind kind = Kind::Identity;
    unsigned power = 0;

    Element apply(const Element& a) const;
    std::string to_string() const;
};

// Checks sigma o alpha0 o sigma = alpha0 on the field generator and a sample of
// elements; throws InvalidAlpha0 otherwise.
void check_alpha0(const FieldPtr& field, const Alpha0& alpha0);

// alpha(sum b_i T^i) = sum sigma^i(alpha0(b_i)) N_i(a0) T^i on left coefficients b_i.
SkewPolynomial anti_automorphism_apply(const SkewPolynomial& P, const Alpha0& alpha0, const Element& a0);

}  // namespace skew

#endif
