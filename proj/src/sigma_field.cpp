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

#include "skew/sigma_field.hpp"

#include <algorithm>

#include "skew/finite_field.hpp"

namespace skew {

Element norm_N(std::size_t i, const Element& a) {
    Element n = a.field()->one();
    for (std::size_t j = 0; j < i; ++j) n = n.sigma() * a;
    return n;
}

std::vector<Element> norms(std::size_t count, const Element& a) {
    std::vector<Element> out;
    out.reserve(count);
    if (count == 0) return out;
    out.push_back(a.field()->one());
    for (std::size_t j = 1; j < count; ++j) out.push_back(out.back().sigma() * a);
    return out;
}

std::vector<Element> inverse_norms(std::size_t count, const Element& a) {
    std::vector<Element> out;
    out.reserve(count);
    if (count == 0) return out;
    out.push_back(a.field()->one());
    for (std::size_t j = 1; j < count; ++j) out.push_back(out.back().sigma_inverse() * a);
    return out;
}

Element conjugate(const Element& a, const Element& x) {
    require_same_field(a.field(), x.field());
    if (x.is_zero()) throw Error(ErrorCode::ZeroConjugator, "conjugating element must be nonzero");
    return x.sigma() * a * x.inverse();
}

Element conjugacy_invariant(const Element& a) { return norm_N(a.field()->sigma_order(), a); }

bool are_sigma_conjugate(const Element& a, const Element& b) {
    require_same_field(a.field(), b.field());
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const auto& field = a.field();
    if (field->sigma_is_identity()) return a == b;
    if (field->is_finite()) {
        const auto q = *field->size();
        for (std::uint64_t i = 1; i < q; ++i)
            if (conjugate(a, field->element_at(i)) == b) return true;
        return false;
    }
    return conjugacy_invariant(a) == conjugacy_invariant(b);
}

std::vector<Element> conjugacy_class(const Element& a) {
    const auto& field = a.field();
    as_finite(field);
    if (a.is_zero() || field->sigma_is_identity()) return {a};
    std::vector<Element> cls;
    const auto q = *field->size();
    for (std::uint64_t i = 1; i < q; ++i) cls.push_back(conjugate(a, field->element_at(i)));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    return cls;
}

std::vector<std::vector<Element>> sigma_conjugacy_classes(const FieldPtr& field) {
    const auto& f = as_finite(field);
    const auto q = f.order();
    std::vector<char> seen(q, 0);
    std::vector<std::vector<Element>> classes;
    for (std::uint64_t i = 0; i < q; ++i) {
        if (seen[i]) continue;
        auto cls = conjugacy_class(field->element_at(i));
        for (const auto& e : cls) seen[f.index_of(e)] = 1;
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace skew
