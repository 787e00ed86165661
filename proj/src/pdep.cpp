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

#include "skew/pdep.hpp"

#include "skew/sigma_field.hpp"

namespace skew {

namespace {

Matrix vandermonde_from(const std::vector<Element>& a, std::size_t rows, bool left) {
    Matrix m(rows, std::vector<Element>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto col = left ? inverse_norms(rows, a[i]) : norms(rows, a[i]);
        for (std::size_t j = 0; j < rows; ++j) m[j][i] = std::move(col[j]);
    }
    return m;
}

const FieldPtr& field_of(const FieldPtr& fallback, const std::vector<Element>& S) {
    for (const auto& a : S) require_same_field(fallback, a.field());
    return fallback;
}

Element det_vandermonde(const FieldPtr& field, const std::vector<Element>& S) {
    return determinant(field, sigma_vandermonde(S, S.size()));
}

Element checked_det(const FieldPtr& field, const std::vector<Element>& S) {
    Element d = det_vandermonde(field, S);
    if (d.is_zero()) throw Error(ErrorCode::NotPIndependent, "the set is not P-independent");
    return d;
}

}  // namespace

Matrix sigma_vandermonde(const std::vector<Element>& a, std::size_t rows) { return vandermonde_from(a, rows, false); }

Matrix left_vandermonde(const std::vector<Element>& a, std::size_t rows) { return vandermonde_from(a, rows, true); }

std::size_t vandermonde_rank(const std::vector<Element>& a) { return rank(sigma_vandermonde(a, a.size())); }

bool is_p_independent(const std::vector<Element>& a) { return vandermonde_rank(a) == a.size(); }

AlgebraicSet minimal_polynomial(const FieldPtr& field, const std::vector<Element>& S) {
    field_of(field, S);
    AlgebraicSet out{S, SkewPolynomial::constant(field->one()), 0, {}};
    for (std::size_t i = 0; i < S.size(); ++i) {
        Element v = eval_right(out.minimal_poly, S[i]);
        if (v.is_zero()) continue;
        // P_{S+a} = (T - a^v) P_S vanishes at a by the product formula.
        out.minimal_poly = SkewPolynomial::linear(conjugate(S[i], v)) * out.minimal_poly;
        out.basis.push_back(i);
    }
    out.rank = out.basis.size();
    for (const auto& a : S)
        if (!eval_right(out.minimal_poly, a).is_zero())
            throw Error(ErrorCode::InternalError, "minimal polynomial does not vanish on its set");
    return out;
}

Element minpoly_eval_det(const std::vector<Element>& S, const Element& a) {
    const auto& field = a.field();
    field_of(field, S);
    Element d = checked_det(field, S);
    auto ext = S;
    ext.push_back(a);
    return det_vandermonde(field, ext) / d;
}

VietaResult minpoly_coeffs_vieta(const FieldPtr& field, const std::vector<Element>& S) {
    field_of(field, S);
    const std::size_t n = S.size();
    Element d = checked_det(field, S);
    Matrix V = sigma_vandermonde(S, n + 1);
    std::vector<Element> b;
    for (std::size_t i = 0; i <= n; ++i) {
        Matrix minor;
        for (std::size_t j = 0; j <= n; ++j)
            if (j != i) minor.push_back(V[j]);
        Element c = determinant(field, std::move(minor)) / d;
        b.push_back((n + i) % 2 ? -c : c);
    }
    Element prod = field->one();
    for (const auto& a : S) prod *= a;
    Element closed = d.sigma() / d * prod;
    if (n % 2) closed = -closed;
    return {SkewPolynomial(field, std::move(b)), d, closed};
}

SkewPolynomial interpolate(const FieldPtr& field, const std::vector<Element>& S, const std::vector<Element>& values) {
    field_of(field, S);
    field_of(field, values);
    if (S.size() != values.size())
        throw Error(ErrorCode::InvalidArgument, "interpolation needs one value per point");
    checked_det(field, S);
    SkewPolynomial P(field);
    for (std::size_t i = 0; i < S.size(); ++i) {
        std::vector<Element> rest;
        for (std::size_t j = 0; j < S.size(); ++j)
            if (j != i) rest.push_back(S[j]);
        auto Pi = minimal_polynomial(field, rest).minimal_poly;
        P += Pi.scaled_left(values[i] / eval_right(Pi, S[i]));
    }
    return P;
}

SkewPolynomial bray_whaples(const FieldPtr& field, const std::vector<Element>& a) {
    field_of(field, a);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (are_sigma_conjugate(a[i], a[j]))
                throw Error(ErrorCode::ConjugatePairDetected,
                            a[i].to_string() + " and " + a[j].to_string() + " are sigma-conjugate");
    auto alg = minimal_polynomial(field, a);
    if (alg.rank != a.size())
        throw Error(ErrorCode::InternalError, "pairwise non-conjugate elements were P-dependent");
    return alg.minimal_poly;
}

std::vector<Element> hat_set(const std::vector<Element>& S) {
    std::vector<Element> out;
    out.reserve(S.size());
    for (const auto& a : S) {
        if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "hat set of a set containing 0");
        out.push_back(a.inverse().sigma_inverse());
    }
    return out;
}

std::size_t hat_set_left_rank(const std::vector<Element>& S) {
    auto h = hat_set(S);
    return rank(left_vandermonde(h, h.size()));
}

}  // namespace skew
