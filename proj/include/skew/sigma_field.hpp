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

#ifndef SKEW_SIGMA_FIELD_HPP
#define SKEW_SIGMA_FIELD_HPP

#include <vector>

#include "skew/field.hpp"

namespace skew {

// N_0(a) = 1, N_i(a) = sigma(N_{i-1}(a)) a.
Element norm_N(std::size_t i, const Element& a);
// N_0 .. N_{count-1}.
std::vector<Element> norms(std::size_t count, const Element& a);
// The sigma^-1 norms: N_{-0}(a) = 1, N_{-i}(a) = sigma^-1(N_{-(i-1)}(a)) a.
std::vector<Element> inverse_norms(std::size_t count, const Element& a);

// a^x = sigma(x) a x^-1; throws ZeroConjugator for x = 0.
Element conjugate(const Element& a, const Element& x);

// N_r(a) with r the order of sigma. For a, b != 0 this is equal exactly when a and b
// are sigma-conjugate (sigma generates a finite cyclic group, so Hilbert 90 applies).
Element conjugacy_invariant(const Element& a);

// Finite fields search for a witness x; infinite fields compare conjugacy_invariant.
bool are_sigma_conjugate(const Element& a, const Element& b);

// Partition of a finite field into sigma-conjugacy classes. Each class is sorted and the
// classes are ordered by their smallest element, so {0} comes first.
std::vector<std::vector<Element>> sigma_conjugacy_classes(const FieldPtr& field);

// The class of a (finite fields only), sorted.
std::vector<Element> conjugacy_class(const Element& a);

}  // namespace skew

#endif
