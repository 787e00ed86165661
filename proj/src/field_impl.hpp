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

#ifndef SKEW_SRC_FIELD_IMPL_HPP
#define SKEW_SRC_FIELD_IMPL_HPP

#include <random>
#include <string>
#include <vector>

#include "skew/field.hpp"

namespace skew::detail {

FieldPtr make_rationals();
FieldPtr make_gaussian_rationals();
FieldPtr make_rational_functions();

Rational random_small_rational(std::mt19937_64& rng);

/* ordinary polynomials over Q, ascending, no trailing zeros */

using QPoly = std::vector<Rational>;

void trim(QPoly& f);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
QPoly monic_gcd(QPoly a, QPoly b);
std::string to_string(const QPoly& f, std::string_view var);

}  // namespace skew::detail

#endif
