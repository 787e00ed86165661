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

#ifndef SKEW_TOWER_HPP
#define SKEW_TOWER_HPP

#include <vector>

#include "skew/field.hpp"
#include "skew/skew_poly.hpp"

namespace skew {

/*
   A sigma-compatible field embedding K -> L. Supported pairs: K = L, Q -> Q(i),
   Q -> Q(x) and F_{p^k} -> F_{p^(kj)} with matching Frobenius powers.
*/
class FieldEmbedding {
   public:
    enum class Kind { Identity, RationalsToGaussian, RationalsToFunctions, FiniteTower };

    const FieldPtr& source() const noexcept { return source_; }
    const FieldPtr& target() const noexcept { return target_; }
    Kind kind() const noexcept { return kind_; }

    Element operator()(const Element& a) const;
    SkewPolynomial operator()(const SkewPolynomial& P) const;

    // Dimension of the source-linear span of the given target elements.
    std::size_t source_rank(const std::vector<Element>& v) const;

   private:
    friend FieldEmbedding make_embedding(const FieldPtr& source, const FieldPtr& target);
    FieldPtr source_, target_;
    Kind kind_ = Kind::Identity;
    Element generator_image_;  // image of u for towers over F_{p^k}, k > 1
};

// Throws Unsupported for pairs outside the list above and FieldMismatch when sigma
// does not restrict correctly.
FieldEmbedding make_embedding(const FieldPtr& source, const FieldPtr& target);

struct TowerExtension {
    FieldPtr field;
    FieldEmbedding embedding;
    unsigned degree = 1;
};

// F_{p^(kj)} with the smallest irreducible modulus and the same Frobenius power; the
// base generator goes to the smallest root of the base modulus.
TowerExtension extend_finite_field(const FieldPtr& base, unsigned j);

}  // namespace skew

#endif
