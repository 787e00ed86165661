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

#ifndef SKEW_SELFTEST_HPP
#define SKEW_SELFTEST_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "skew/skew_poly.hpp"

namespace skew {

struct SelftestResult {
    std::string field;
    std::string property;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;  // empty when all cases pass
};

// One descriptor for each kind of field the library ships.
std::vector<std::string> default_selftest_fields();

// Random polynomial of degree <= max_degree (possibly zero).
SkewPolynomial random_polynomial(const FieldPtr& field, std::size_t max_degree, std::mt19937_64& rng);

/*
   Randomized sweep of the norm identities, the product formula, evaluation as a
   remainder and both division contracts; `cases` samples per property and field.
*/
std::vector<SelftestResult> run_selftest(const std::vector<std::string>& fields, std::size_t cases,
                                         std::uint64_t seed);

}  // namespace skew

#endif
