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

#ifndef SKEW_HADAMARD_HPP
#define SKEW_HADAMARD_HPP

#include <vector>

#include "skew/fraction_field.hpp"

namespace skew {

// (N_0(a), N_1(a), ...) truncated to entries.size().
struct NormVector {
    Element generator;
    std::vector<Element> entries;
};

NormVector make_norm_vector(const Element& a, std::size_t length);
// N(a) N(b) = N(ab) entrywise.
NormVector pointwise_product(const NormVector& x, const NormVector& y);

// sum s_i t_i T^i to the common precision; throws NegativeValuation.
TruncatedSeries hadamard_product(const TruncatedSeries& s, const TruncatedSeries& t);

// A combination sum b_j N(a_j), stored as SimpleTerm{b_j, a_j}.
using NormCombination = std::vector<SimpleTerm>;

// The product of two combinations, expanded termwise with N(a)N(b) = N(ab).
NormCombination combination_product(const NormCombination& x, const NormCombination& y);

// Coefficient i of the sequence sum b_j N_i(a_j).
Element combination_entry(const NormCombination& c, const FieldPtr& field, std::size_t i);

// sum b_j (1 - a_j T)^-1 expanded to precision; throws ZeroGenerator for a_j = 0.
TruncatedSeries alpha_map(const FieldPtr& field, const NormCombination& c, std::size_t precision);

struct NormRecovery {
    FieldPtr field;
    unsigned extension_degree = 1;
    NormCombination terms;  // (b_j, c_j)
    std::size_t threshold = 0;  // coefficient i of x is sum b_j N_i(c_j) for all i >= threshold
    std::size_t verified_to = 0;  // checked against the series up to this exponent (exclusive)
};

NormRecovery recover_norm_combination(const OreFraction& x, const PfdOptions& options = {});

}  // namespace skew

#endif
