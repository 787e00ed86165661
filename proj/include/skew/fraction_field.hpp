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

#ifndef SKEW_FRACTION_FIELD_HPP
#define SKEW_FRACTION_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "skew/skew_poly.hpp"
#include "skew/tower.hpp"

namespace skew {

// The right fraction A B^-1 in K(T; sigma).
class OreFraction {
   public:
    OreFraction(SkewPolynomial A, SkewPolynomial B);  // throws ZeroDenominator
    static OreFraction from_polynomial(const SkewPolynomial& A);
    // P^-1 Q, rewritten as a right fraction through lcrm(P, Q).
    static OreFraction from_left(const SkewPolynomial& P, const SkewPolynomial& Q);

    const FieldPtr& field() const noexcept { return A_.field(); }
    const SkewPolynomial& numerator() const noexcept { return A_; }
    const SkewPolynomial& denominator() const noexcept { return B_; }
    bool is_zero() const noexcept { return A_.is_zero(); }

    // A and B right coprime and B monic; unique for the value.
    OreFraction reduced() const;

    // deg A - deg B; throws for zero.
    long long degree() const;

    std::string to_string() const;

    friend bool operator==(const OreFraction& x, const OreFraction& y);

   private:
    SkewPolynomial A_, B_;
};

OreFraction frac_add(const OreFraction& x, const OreFraction& y);
OreFraction frac_sub(const OreFraction& x, const OreFraction& y);
OreFraction frac_neg(const OreFraction& x);
OreFraction frac_mul(const OreFraction& x, const OreFraction& y);
OreFraction frac_inv(const OreFraction& x);  // throws ZeroDenominator for zero

// Laurent series sum c_e T^e, e >= valuation, with left coefficients.
struct TruncatedSeries {
    FieldPtr field;
    long long valuation = 0;
    std::vector<Element> coeffs;  // exponents valuation .. valuation + size - 1

    long long end() const noexcept { return valuation + static_cast<long long>(coeffs.size()); }
    bool is_zero() const;
    // Drops leading zero coefficients (raising the valuation) unless all are zero.
    void normalize();
    // Zero below the valuation; throws past the known range.
    Element coefficient(long long e) const;
    std::string to_string() const;
};

TruncatedSeries series_expand(const OreFraction& x, std::size_t precision);
// Coefficientwise sum over the common known range.
TruncatedSeries series_add(const TruncatedSeries& s, const TruncatedSeries& t);

/* partial fractions */

struct SimpleTerm {
    Element b, c;  // b (1 - c T)^-1
};

struct PfdResult {
    FieldPtr field;               // where every part lives
    unsigned extension_degree = 1;  // [field : K]
    SkewPolynomial polynomial_part;
    std::vector<Element> pole_part;  // a_1..a_m, coefficient of T^-i at i - 1
    std::vector<SimpleTerm> terms;
};

struct PfdOptions {
    enum class RootOrder { Ascending, Descending, Shuffled };
    unsigned tower_bound = 6;
    RootOrder order = RootOrder::Ascending;
    std::uint64_t seed = 0;
    // Roots of the denominator to use instead of a search (any field).
    std::vector<Element> candidate_roots;
};

// x = P_0 + sum a_i T^-i + sum b_i (1 - c_i T)^-1 with the c_i nonzero and P-independent.
PfdResult pfd(const OreFraction& x, const PfdOptions& options = {});
OreFraction recombine(const PfdResult& r);

}  // namespace skew

#endif
