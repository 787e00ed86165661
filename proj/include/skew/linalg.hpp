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

#ifndef SKEW_LINALG_HPP
#define SKEW_LINALG_HPP

#include <cstdint>
#include <vector>

#include "skew/field.hpp"

namespace skew {

// Row-major dense matrix.
using Matrix = std::vector<std::vector<Element>>;

// Gaussian elimination with the first nonzero pivot in each column.
std::size_t rank(Matrix m);
Element determinant(const FieldPtr& field, Matrix m);  // square, possibly 0x0

/* matrices over F_p */

using ModMatrix = std::vector<std::vector<std::uint64_t>>;

std::size_t rank_mod_p(ModMatrix m, std::uint64_t p);
// Basis of {v : m v = 0} for an r x c matrix.
std::vector<std::vector<std::uint64_t>> kernel_mod_p(ModMatrix m, std::size_t cols, std::uint64_t p);

}  // namespace skew

#endif
