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

#include "skew/tower.hpp"

#include "field_impl.hpp"
#include "skew/finite_field.hpp"
#include "skew/linalg.hpp"

namespace skew {

using FK = FieldDescriptor::Kind;

Element FieldEmbedding::operator()(const Element& a) const {
    require_same_field(source_, a.field());
    switch (kind_) {
        case Kind::Identity: return a;
        case Kind::RationalsToGaussian:
            return Element(target_, GaussianValue{std::get<Rational>(a.payload()), Rational(0)});
        case Kind::RationalsToFunctions:
            return Element(target_, RatFuncValue{sgn(std::get<Rational>(a.payload())) == 0
                                                     ? std::vector<Rational>{}
                                                     : std::vector<Rational>{std::get<Rational>(a.payload())},
                                                 {Rational(1)}});
        case Kind::FiniteTower: {
            const auto& S = as_finite(source_);
            auto c = S.coordinates(a);
            if (S.degree() == 1) return target_->from_integer(static_cast<long long>(c[0]));
            Element acc = target_->zero();
            for (std::size_t j = c.size(); j-- > 0;)
                acc = acc * generator_image_ + target_->from_integer(static_cast<long long>(c[j]));
            return acc;
        }
    }
    return a;
}

SkewPolynomial FieldEmbedding::operator()(const SkewPolynomial& P) const {
    std::vector<Element> c;
    for (const auto& a : P.coefficients()) c.push_back((*this)(a));
    return SkewPolynomial(target_, std::move(c));
}

std::size_t FieldEmbedding::source_rank(const std::vector<Element>& v) const {
    for (const auto& e : v) require_same_field(target_, e.field());
    switch (kind_) {
        case Kind::Identity: {
            for (const auto& e : v)
                if (!e.is_zero()) return 1;
            return 0;
        }
        case Kind::RationalsToGaussian: {
            Matrix m;
            for (const auto& e : v) {
                const auto& g = std::get<GaussianValue>(e.payload());
                m.push_back({Element(source_, g.re), Element(source_, g.im)});
            }
            return rank(std::move(m));
        }
        case Kind::RationalsToFunctions: {
            // Clear denominators, then compare numerator coefficient vectors.
            detail::QPoly common{Rational(1)};
            for (const auto& e : v) {
                const auto& den = std::get<RatFuncValue>(e.payload()).den;
                detail::QPoly g = detail::monic_gcd(common, den), q, r;
                detail::divmod(den, g, q, r);
                common = detail::mul(common, q);
            }
            std::vector<detail::QPoly> rows;
            std::size_t width = 0;
            for (const auto& e : v) {
                const auto& f = std::get<RatFuncValue>(e.payload());
                detail::QPoly q, r;
                detail::divmod(common, f.den, q, r);
                rows.push_back(detail::mul(f.num, q));
                width = std::max(width, rows.back().size());
            }
            Matrix m;
            for (const auto& row : rows) {
                std::vector<Element> out;
                for (std::size_t j = 0; j < width; ++j)
                    out.push_back(Element(source_, j < row.size() ? row[j] : Rational(0)));
                m.push_back(std::move(out));
            }
            return rank(std::move(m));
        }
        case Kind::FiniteTower: {
            // F_{p^k}-rank = (F_p-rank of {u^s e}) / k.
            const auto& S = as_finite(source_);
            const auto& T = as_finite(target_);
            ModMatrix m;
            for (const auto& e : v) {
                Element t = e;
                for (unsigned s = 0; s < S.degree(); ++s) {
                    m.push_back(T.coordinates(t));
                    if (S.degree() > 1) t = t * generator_image_;
                }
            }
            return rank_mod_p(std::move(m), T.p()) / S.degree();
        }
    }
    return 0;
}

FieldEmbedding make_embedding(const FieldPtr& source, const FieldPtr& target) {
    FieldEmbedding e;
    e.source_ = source;
    e.target_ = target;
    const auto& sd = source->descriptor();
    const auto& td = target->descriptor();
    if (same_field(source, target)) {
        e.kind_ = FieldEmbedding::Kind::Identity;
        return e;
    }
    if (sd.kind == FK::Rationals && td.kind == FK::GaussianRationals) {
        e.kind_ = FieldEmbedding::Kind::RationalsToGaussian;
        return e;
    }
    if (sd.kind == FK::Rationals && td.kind == FK::RationalFunctions) {
        e.kind_ = FieldEmbedding::Kind::RationalsToFunctions;
        return e;
    }
    if (source->is_finite() && target->is_finite()) {
        const auto& S = as_finite(source);
        const auto& T = as_finite(target);
        if (S.p() != T.p() || T.degree() % S.degree() != 0)
            throw Error(ErrorCode::Unsupported, "no embedding " + source->name() + " -> " + target->name());
        e.kind_ = FieldEmbedding::Kind::FiniteTower;
        if (S.degree() > 1) {
            const auto& mod = S.modulus();
            bool found = false;
            for (std::uint64_t i = 0; i < T.order() && !found; ++i) {
                Element x = target->element_at(i), acc = target->zero();
                for (std::size_t j = mod.size(); j-- > 0;)
                    acc = acc * x + target->from_integer(static_cast<long long>(mod[j]));
                if (acc.is_zero()) {
                    e.generator_image_ = x;
                    found = true;
                }
            }
            if (!found) throw Error(ErrorCode::InternalError, "base modulus has no root in the extension");
            Element u = source->generator();
            if (!(T.frobenius(e(u), T.frobenius_power()) == e(u.sigma())))
                throw Error(ErrorCode::FieldMismatch, "sigma does not restrict along " + source->name() + " -> " +
                                                          target->name());
        }
        return e;
    }
    throw Error(ErrorCode::Unsupported, "no embedding " + source->name() + " -> " + target->name());
}

TowerExtension extend_finite_field(const FieldPtr& base, unsigned j) {
    const auto& B = as_finite(base);
    if (j == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
    if (j == 1) return {base, make_embedding(base, base), 1};

    FieldDescriptor d;
    d.kind = FK::FiniteField;
    d.p = B.p();
    d.k = B.degree() * j;
    d.frob = B.frobenius_power();
    d.modulus = finite::smallest_irreducible(d.p, d.k);
    FieldPtr L = make_field(d);
    return {L, make_embedding(base, L), j};
}

}  // namespace skew
