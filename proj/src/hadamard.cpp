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

#include "skew/hadamard.hpp"

#include <algorithm>

#include "skew/sigma_field.hpp"

namespace skew {

NormVector make_norm_vector(const Element& a, std::size_t length) { return {a, norms(length, a)}; }

NormVector pointwise_product(const NormVector& x, const NormVector& y) {
    require_same_field(x.generator.field(), y.generator.field());
    NormVector r{x.generator * y.generator, {}};
    const std::size_t n = std::min(x.entries.size(), y.entries.size());
    for (std::size_t i = 0; i < n; ++i) r.entries.push_back(x.entries[i] * y.entries[i]);
    return r;
}

TruncatedSeries hadamard_product(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same_field(s.field, t.field);
    if (s.valuation < 0 || t.valuation < 0)
        throw Error(ErrorCode::NegativeValuation, "Hadamard product needs series without negative powers");
    TruncatedSeries r{s.field, 0, {}};
    const long long stop = std::min(s.end(), t.end());
    for (long long e = 0; e < stop; ++e) r.coeffs.push_back(s.coefficient(e) * t.coefficient(e));
    r.normalize();
    return r;
}

NormCombination combination_product(const NormCombination& x, const NormCombination& y) {
    NormCombination r;
    for (const auto& p : x)
        for (const auto& q : y) r.push_back({p.b * q.b, p.c * q.c});
    return r;
}

Element combination_entry(const NormCombination& c, const FieldPtr& field, std::size_t i) {
    Element acc = field->zero();
    for (const auto& t : c) acc += t.b * norm_N(i, t.c);
    return acc;
}

TruncatedSeries alpha_map(const FieldPtr& field, const NormCombination& c, std::size_t precision) {
    if (precision == 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
    TruncatedSeries acc{field, 0, std::vector<Element>(precision, field->zero())};
    for (const auto& t : c) {
        require_same_field(field, t.c.field());
        if (t.c.is_zero()) throw Error(ErrorCode::ZeroGenerator, "alpha is only defined for nonzero generators");
        OreFraction f(SkewPolynomial::constant(t.b), SkewPolynomial(field, {field->one(), -t.c}));
        acc = series_add(acc, series_expand(f, precision));
    }
    return acc;
}

NormRecovery recover_norm_combination(const OreFraction& x, const PfdOptions& options) {
    PfdResult d = pfd(x, options);
    NormRecovery r{d.field, d.extension_degree, d.terms, 0, 0};
    if (!d.polynomial_part.is_zero()) r.threshold = d.polynomial_part.degree().value() + 1;
    r.verified_to = r.threshold + 32;

    // The pole part only touches negative exponents, so it does not move the threshold.
    FieldEmbedding emb = make_embedding(x.field(), d.field);
    OreFraction xl(emb(x.numerator()), emb(x.denominator()));
    TruncatedSeries s{d.field, 0, {}};
    if (xl.is_zero()) {
        s.coeffs.assign(r.verified_to, d.field->zero());
    } else {
        const long long v = static_cast<long long>(xl.numerator().valuation()) -
                            static_cast<long long>(xl.denominator().valuation());
        const long long need = static_cast<long long>(r.verified_to) - v;
        s = series_expand(xl, static_cast<std::size_t>(std::max<long long>(need, 1)));
    }
    for (std::size_t i = r.threshold; i < r.verified_to; ++i)
        if (!(s.coefficient(static_cast<long long>(i)) == combination_entry(r.terms, d.field, i)))
            throw Error(ErrorCode::InternalError, "recovered combination disagrees with the series at T^" +
                                                      std::to_string(i));
    return r;
}

}  // namespace skew
