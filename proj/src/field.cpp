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

#include "skew/field.hpp"

#include <charconv>

#include "field_impl.hpp"
#include "skew/finite_field.hpp"

namespace skew {

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw Error(ErrorCode::InvalidDescriptor, "invalid " + std::string(what) + ": '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

/* descriptors */

FieldDescriptor FieldDescriptor::parse(std::string_view text) {
    FieldDescriptor d;
    if (text == "q") return d;
    if (text == "qi") {
        d.kind = Kind::GaussianRationals;
        return d;
    }
    if (text == "qx-inv") {
        d.kind = Kind::RationalFunctions;
        return d;
    }
    if (!text.starts_with("gf:"))
        throw Error(ErrorCode::InvalidDescriptor, "unknown field descriptor '" + std::string(text) + "'");

    auto parts = split(text.substr(3), ':');
    auto head = parts[0];
    auto caret = head.find('^');
    d.p = parse_u64(head.substr(0, caret), "characteristic");
    if (!is_prime(d.p)) throw Error(ErrorCode::InvalidDescriptor, "characteristic must be prime");
    if (d.p >= (std::uint64_t{1} << 31))
        throw Error(ErrorCode::InvalidDescriptor, "characteristic must be below 2^31");
    d.k = 1;
    if (caret != std::string_view::npos) {
        auto k = parse_u64(head.substr(caret + 1), "degree");
        if (k == 0 || k > 64) throw Error(ErrorCode::InvalidDescriptor, "degree must be in [1, 64]");
        d.k = static_cast<unsigned>(k);
    }

    bool have_modulus = false, have_frob = false;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        auto part = parts[i];
        if (part.starts_with("modulus=") && !have_modulus) {
            have_modulus = true;
            for (auto c : split(part.substr(8), ',')) d.modulus.push_back(parse_u64(c, "modulus coefficient"));
        } else if (part.starts_with("frob=") && !have_frob) {
            have_frob = true;
            auto n = parse_u64(part.substr(5), "frobenius power");
            if (n == 0) throw Error(ErrorCode::InvalidDescriptor, "frobenius power must be at least 1");
            if (n > 1024) throw Error(ErrorCode::InvalidDescriptor, "frobenius power too large");
            d.frob = static_cast<unsigned>(n);
        } else {
            throw Error(ErrorCode::InvalidDescriptor, "unexpected descriptor component '" + std::string(part) + "'");
        }
    }

    if (d.k == 1) {
        if (have_modulus || have_frob)
            throw Error(ErrorCode::InvalidDescriptor, "prime fields take no modulus or frobenius power");
        d.kind = Kind::PrimeField;
        d.frob = 1;
        return d;
    }

    d.kind = Kind::FiniteField;
    std::uint64_t q = 1;
    for (unsigned i = 0; i < d.k; ++i) {
        if (q > (std::uint64_t{1} << 62) / d.p) throw Error(ErrorCode::InvalidDescriptor, "field too large");
        q *= d.p;
    }
    if (have_modulus) {
        if (d.modulus.size() != d.k + 1)
            throw Error(ErrorCode::InvalidDescriptor, "modulus must have k + 1 coefficients");
        for (auto c : d.modulus)
            if (c >= d.p) throw Error(ErrorCode::InvalidDescriptor, "modulus coefficients must lie in [0, p)");
        if (d.modulus.back() == 0) throw Error(ErrorCode::InvalidDescriptor, "modulus must have degree k");
        d.modulus = finite::make_monic(d.p, d.modulus);
        if (!finite::is_irreducible(d.p, d.modulus))
            throw Error(ErrorCode::InvalidDescriptor, "modulus is not irreducible");
    } else {
        d.modulus = finite::smallest_irreducible(d.p, d.k);
    }
    return d;
}

std::string FieldDescriptor::to_string() const {
    switch (kind) {
        case Kind::Rationals: return "q";
        case Kind::GaussianRationals: return "qi";
        case Kind::RationalFunctions: return "qx-inv";
        case Kind::PrimeField: return "gf:" + std::to_string(p);
        case Kind::FiniteField: {
            std::string s = "gf:" + std::to_string(p) + "^" + std::to_string(k) + ":modulus=";
            for (std::size_t i = 0; i < modulus.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(modulus[i]);
            }
            return s + ":frob=" + std::to_string(frob);
        }
    }
    return "?";
}

FieldPtr make_field(std::string_view descriptor) { return make_field(FieldDescriptor::parse(descriptor)); }

FieldPtr make_field(const FieldDescriptor& d) {
    switch (d.kind) {
        case FieldDescriptor::Kind::Rationals: return detail::make_rationals();
        case FieldDescriptor::Kind::GaussianRationals: return detail::make_gaussian_rationals();
        case FieldDescriptor::Kind::RationalFunctions: return detail::make_rational_functions();
        case FieldDescriptor::Kind::PrimeField:
        case FieldDescriptor::Kind::FiniteField: return std::make_shared<FiniteSigmaField>(d);
    }
    throw Error(ErrorCode::InvalidDescriptor, "unknown field kind");
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->name() == b->name();
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!same_field(a, b))
        throw Error(ErrorCode::FieldMismatch, "operands live in different fields (" + (a ? a->name() : "none") +
                                                  " vs " + (b ? b->name() : "none") + ")");
}

/* SigmaField */

SigmaField::SigmaField(FieldDescriptor descriptor)
    : descriptor_(std::move(descriptor)), name_(descriptor_.to_string()) {}

Element SigmaField::wrap(Payload value) const { return Element(shared_from_this(), std::move(value)); }

Element SigmaField::zero() const { return wrap(p_from_integer(Integer(0))); }
Element SigmaField::one() const { return wrap(p_from_integer(Integer(1))); }
Element SigmaField::from_integer(long long n) const { return wrap(p_from_integer(Integer(std::to_string(n)))); }
Element SigmaField::from_integer(const Integer& n) const { return wrap(p_from_integer(n)); }
Element SigmaField::generator() const { return wrap(p_generator()); }
Element SigmaField::random(std::mt19937_64& rng) const { return wrap(p_random(rng)); }

Element SigmaField::random_nonzero(std::mt19937_64& rng) const {
    while (true) {
        auto e = random(rng);
        if (!e.is_zero()) return e;
    }
}

Payload SigmaField::p_element_at(std::uint64_t) const {
    throw Error(ErrorCode::InfiniteField, "field " + name() + " is infinite");
}

Element SigmaField::element_at(std::uint64_t index) const { return wrap(p_element_at(index)); }

std::vector<Element> SigmaField::elements() const {
    auto q = size();
    if (!q) throw Error(ErrorCode::InfiniteField, "field " + name() + " is infinite");
    std::vector<Element> out;
    out.reserve(*q);
    for (std::uint64_t i = 0; i < *q; ++i) out.push_back(element_at(i));
    return out;
}

/* Element */

const SigmaField& Element::checked() const {
    if (!field_) throw Error(ErrorCode::InvalidArgument, "operation on an uninitialised element");
    return *field_;
}

bool Element::is_zero() const { return checked().p_is_zero(value_); }
bool Element::is_one() const { return checked().p_equal(value_, field_->p_from_integer(Integer(1))); }

Element Element::operator+(const Element& o) const {
    require_same_field(field_, o.field_);
    return Element(field_, field_->p_add(value_, o.value_));
}

Element Element::operator-(const Element& o) const {
    require_same_field(field_, o.field_);
    return Element(field_, field_->p_sub(value_, o.value_));
}

Element Element::operator*(const Element& o) const {
    require_same_field(field_, o.field_);
    return Element(field_, field_->p_mul(value_, o.value_));
}

Element Element::operator/(const Element& o) const { return *this * o.inverse(); }

Element Element::operator-() const { return Element(field_, checked().p_neg(value_)); }

Element Element::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return Element(field_, field_->p_inv(value_));
}

Element Element::sigma() const { return Element(field_, checked().p_sigma(value_)); }
Element Element::sigma_inverse() const { return Element(field_, checked().p_sigma_inverse(value_)); }

Element Element::sigma_power(long long j) const {
    long long r = checked().sigma_order();
    long long e = ((j % r) + r) % r;
    Element x = *this;
    for (long long i = 0; i < e; ++i) x = x.sigma();
    return x;
}

Element Element::pow(std::uint64_t e) const {
    Element base = *this, acc = checked().one();
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

std::string Element::to_string() const { return checked().p_to_string(value_); }

bool operator==(const Element& a, const Element& b) {
    if (!same_field(a.field_, b.field_)) return false;
    return a.field_->p_equal(a.value_, b.value_);
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
    require_same_field(a.field_, b.field_);
    return a.field_->p_compare(a.value_, b.value_);
}

}  // namespace skew
