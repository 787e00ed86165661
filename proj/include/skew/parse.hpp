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

#ifndef SKEW_PARSE_HPP
#define SKEW_PARSE_HPP

#include <string_view>
#include <vector>

#include "skew/field.hpp"
#include "skew/skew_poly.hpp"

namespace skew {

/*
   Arithmetic expressions with + - * / ^ and parentheses over integer literals, the
   field generator (u, i or x) and, for polynomials, the indeterminate T. A literal
   directly followed by a symbol multiplies it ("3i", "2T"). Division is only by
   nonzero constants and acts as right multiplication by the inverse.
*/
Element parse_element(const FieldPtr& field, std::string_view text);
SkewPolynomial parse_polynomial(const FieldPtr& field, std::string_view text);

// Comma-separated element list; empty text gives an empty list.
std::vector<Element> parse_element_list(const FieldPtr& field, std::string_view text);

}  // namespace skew

#endif
