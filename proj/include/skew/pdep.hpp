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

#ifndef SKEW_PDEP_HPP
#define SKEW_PDEP_HPP

#include <vector>

#include "skew/linalg.hpp"
#include "skew/skew_poly.hpp"

namespace skew {

// rows x n matrix with entry (j, i) = N_j(a_i).
Matrix sigma_vandermonde(const std::vector<Element>& a, std::size_t rows);
// rows x n matrix with entry (j, i) = N_{-j}(a_i), built from the sigma^-1 norms.
Matrix left_vandermonde(const std::vector<Element>& a, std::size_t rows);

std::size_t vandermonde_rank(const std::vector<Element>& a);
bool is_p_independent(const std::vector<Element>& a);

struct AlgebraicSet {
    std::vector<Element> elements;
    SkewPolynomial minimal_poly;
    std::size_t rank = 0;
    // Positions (into elements) of a P-basis picked greedily in input order.
    std::vector<std::size_t> basis;
};

// field is only consulted for the empty set.
AlgebraicSet minimal_polynomial(const FieldPtr& field, const std::vector<Element>& S);

// det V(S, a) / det V(S) for P-independent S.
Element minpoly_eval_det(const std::vector<Element>& S, const Element& a);

struct VietaResult {
    SkewPolynomial poly;
    Element det;
    Element b0_closed_form;  // (-1)^n sigma(det V)/det V a_1...a_n
};

VietaResult minpoly_coeffs_vieta(const FieldPtr& field, const std::vector<Element>& S);

// The unique P with deg P < |S| and P(a_i) = b_i.
SkewPolynomial interpolate(const FieldPtr& field, const std::vector<Element>& S, const std::vector<Element>& values);

// Monic polynomial of degree n whose roots are exactly a_1..a_n (pairwise non-conjugate).
SkewPolynomial bray_whaples(const FieldPtr& field, const std::vector<Element>& a);

// {sigma^-1(a^-1) : a in S}.
std::vector<Element> hat_set(const std::vector<Element>& S);
// Rank of the left Vandermonde of hat_set(S).
std::size_t hat_set_left_rank(const std::vector<Element>& S);

}  // namespace skew

#endif
