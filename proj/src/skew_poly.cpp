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

#include "skew/skew_poly.hpp"

#include <algorithm>

#include "skew/finite_field.hpp"
#include "skew/sigma_field.hpp"

namespace skew {

/* Degree */

std::size_t Degree::value() const {
    if (is_minus_infinity()) throw Error(ErrorCode::InvalidArgument, "degree of the zero polynomial");
    return static_cast<std::size_t>(d_);
}

std::string Degree::to_string() const { return is_minus_infinity() ? "-inf" : std::to_string(d_); }

/* SkewPolynomial */

SkewPolynomial::SkewPolynomial(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw Error(ErrorCode::InvalidArgument, "polynomial without a field");
}

SkewPolynomial::SkewPolynomial(FieldPtr field, std::vector<Element> coefficients)
    : field_(std::move(field)), c_(std::move(coefficients)) {
    if (!field_) throw Error(ErrorCode::InvalidArgument, "polynomial without a field");
    for (const auto& c : c_) require_same_field(field_, c.field());
    trim();
}

void SkewPolynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

SkewPolynomial SkewPolynomial::constant(const Element& c) { return SkewPolynomial(c.field(), {c}); }

SkewPolynomial SkewPolynomial::monomial(const Element& c, std::size_t k) {
    std::vector<Element> v(k + 1, c.field()->zero());
    v[k] = c;
    return SkewPolynomial(c.field(), std::move(v));
}

SkewPolynomial SkewPolynomial::T(const FieldPtr& field) { return monomial(field->one(), 1); }

SkewPolynomial SkewPolynomial::linear(const Element& a) { return SkewPolynomial(a.field(), {-a, a.field()->one()}); }

Element SkewPolynomial::coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }

bool SkewPolynomial::is_monic() const { return !c_.empty() && c_.back().is_one(); }

Element SkewPolynomial::leading_coefficient() const {
    if (c_.empty()) throw Error(ErrorCode::InvalidArgument, "leading coefficient of the zero polynomial");
    return c_.back();
}

std::size_t SkewPolynomial::valuation() const {
    if (c_.empty()) throw Error(ErrorCode::InvalidArgument, "valuation of the zero polynomial");
    std::size_t v = 0;
    while (c_[v].is_zero()) ++v;
    return v;
}

SkewPolynomial SkewPolynomial::operator+(const SkewPolynomial& o) const {
    require_same_field(field_, o.field_);
    std::vector<Element> c(std::max(c_.size(), o.c_.size()), field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return SkewPolynomial(field_, std::move(c));
}

SkewPolynomial SkewPolynomial::operator-(const SkewPolynomial& o) const {
    require_same_field(field_, o.field_);
    std::vector<Element> c(std::max(c_.size(), o.c_.size()), field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return SkewPolynomial(field_, std::move(c));
}

SkewPolynomial SkewPolynomial::operator-() const {
    std::vector<Element> c;
    c.reserve(c_.size());
    for (const auto& a : c_) c.push_back(-a);
    return SkewPolynomial(field_, std::move(c));
}

// (sum a_i T^i)(sum b_j T^j) = sum a_i sigma^i(b_j) T^(i+j)
SkewPolynomial SkewPolynomial::operator*(const SkewPolynomial& o) const {
    require_same_field(field_, o.field_);
    if (is_zero() || o.is_zero()) return SkewPolynomial(field_);
    std::vector<Element> c(c_.size() + o.c_.size() - 1, field_->zero());
    std::vector<Element> sb = o.c_;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) {
            for (auto& b : sb) b = b.sigma();
        }
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < sb.size(); ++j) c[i + j] += c_[i] * sb[j];
    }
    return SkewPolynomial(field_, std::move(c));
}

SkewPolynomial SkewPolynomial::scaled_left(const Element& s) const {
    std::vector<Element> c;
    c.reserve(c_.size());
    for (const auto& a : c_) c.push_back(s * a);
    return SkewPolynomial(field_, std::move(c));
}

SkewPolynomial SkewPolynomial::scaled_right(const Element& s) const {
    std::vector<Element> c;
    c.reserve(c_.size());
    Element si = s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) si = si.sigma();
        c.push_back(c_[i] * si);
    }
    return SkewPolynomial(field_, std::move(c));
}

SkewPolynomial SkewPolynomial::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Element> c(k, field_->zero());
    c.insert(c.end(), c_.begin(), c_.end());
    return SkewPolynomial(field_, std::move(c));
}

SkewPolynomial SkewPolynomial::monic() const {
    if (is_zero()) return *this;
    return scaled_left(leading_coefficient().inverse());
}

SkewPolynomial SkewPolynomial::monic_right() const {
    if (is_zero()) return *this;
    auto n = static_cast<long long>(degree().value());
    return scaled_right(leading_coefficient().inverse().sigma_power(-n));
}

bool operator==(const SkewPolynomial& a, const SkewPolynomial& b) {
    if (!same_field(a.field_, b.field_) || a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

namespace {

bool atomic(const std::string& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-') return false;
    return true;
}

}  // namespace

std::string SkewPolynomial::to_string() const {
    if (is_zero()) return "0";
    if (c_.size() == 1) return c_[0].to_string();
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string s = c_[i].to_string();
        std::string term;
        if (i == 0) {
            term = atomic(s) ? s : "(" + s + ")";
        } else {
            std::string mono = i == 1 ? "T" : "T^" + std::to_string(i);
            if (s == "1")
                term = mono;
            else if (s == "-1")
                term = "-" + mono;
            else
                term = (atomic(s) ? s : "(" + s + ")") + "*" + mono;
        }
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

/* evaluation */

Element eval_right(const SkewPolynomial& P, const Element& a) {
    require_same_field(P.field(), a.field());
    Element acc = a.field()->zero(), n = a.field()->one();
    const auto& c = P.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) n = n.sigma() * a;
        acc += c[i] * n;
    }
    return acc;
}

Element eval_left(const SkewPolynomial& P, const Element& a) {
    require_same_field(P.field(), a.field());
    Element acc = a.field()->zero(), n = a.field()->one();
    const auto& c = P.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) n = n.sigma_inverse() * a;
        acc += c[i].sigma_power(-static_cast<long long>(i)) * n;
    }
    return acc;
}

/* division */

DivMod right_divmod(const SkewPolynomial& P, const SkewPolynomial& D) {
    require_same_field(P.field(), D.field());
    if (D.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "division by the zero polynomial");
    const auto& F = P.field();
    std::vector<Element> r = P.coefficients();
    const auto& d = D.coefficients();
    const std::size_t n = d.size() - 1;
    if (r.size() <= n) return {SkewPolynomial(F), P};
    std::vector<Element> q(r.size() - n, F->zero());
    // sd[j] = sigma^k(d_j) for the current shift k, walked downwards from the top shift.
    const std::size_t top = r.size() - 1 - n;
    std::vector<Element> sd = d;
    for (auto& x : sd) x = x.sigma_power(static_cast<long long>(top));
    for (std::size_t k = top + 1; k-- > 0;) {
        if (k != top)
            for (auto& x : sd) x = x.sigma_inverse();
        const Element& lead = r[k + n];
        if (lead.is_zero()) continue;
        Element c = lead / sd[n];
        q[k] = c;
        for (std::size_t j = 0; j < n; ++j) r[k + j] -= c * sd[j];
        r[k + n] = F->zero();
    }
    r.resize(n);
    return {SkewPolynomial(F, std::move(q)), SkewPolynomial(F, std::move(r))};
}

DivMod left_divmod(const SkewPolynomial& P, const SkewPolynomial& D) {
    require_same_field(P.field(), D.field());
    if (D.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "division by the zero polynomial");
    const auto& F = P.field();
    std::vector<Element> r = P.coefficients();
    const auto& d = D.coefficients();
    const std::size_t n = d.size() - 1;
    if (r.size() <= n) return {SkewPolynomial(F), P};
    std::vector<Element> q(r.size() - n, F->zero());
    const Element lead_inv = d[n].inverse();
    for (std::size_t k = r.size() - n; k-- > 0;) {
        const Element& top = r[k + n];
        if (top.is_zero()) continue;
        // D (c T^k) has leading term d_n sigma^n(c) T^(n+k).
        Element c = (top * lead_inv).sigma_power(-static_cast<long long>(n));
        q[k] = c;
        Element sc = c;
        for (std::size_t j = 0; j < n; ++j) {
            if (j) sc = sc.sigma();
            r[k + j] -= d[j] * sc;
        }
        r[k + n] = F->zero();
    }
    r.resize(n);
    return {SkewPolynomial(F, std::move(q)), SkewPolynomial(F, std::move(r))};
}

/* right form */

std::vector<Element> to_right_form(const SkewPolynomial& P) {
    std::vector<Element> b;
    const auto& a = P.coefficients();
    b.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) b.push_back(a[i].sigma_power(-static_cast<long long>(i)));
    return b;
}

SkewPolynomial from_right_form(const FieldPtr& field, const std::vector<Element>& b) {
    std::vector<Element> a;
    a.reserve(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a.push_back(b[i].sigma_power(static_cast<long long>(i)));
    return SkewPolynomial(field, std::move(a));
}

/* gcd and lcm */

namespace {

struct EuclidState {
    SkewPolynomial r0, r1, s0, s1, t0, t1;
};

// Extended Euclid on the left (right = false: r = s P + t Q, right divisions) or right
// (right = true: r = P s + Q t, left divisions) ideal side. On return r1 = 0 and r0 is a gcd.
EuclidState euclid(const SkewPolynomial& P, const SkewPolynomial& Q, bool right_ideal) {
    const auto& F = P.field();
    SkewPolynomial one = SkewPolynomial::constant(F->one()), zero(F);
    EuclidState st{P, Q, one, zero, zero, one};
    while (!st.r1.is_zero()) {
        DivMod dm = right_ideal ? left_divmod(st.r0, st.r1) : right_divmod(st.r0, st.r1);
        SkewPolynomial s2 = right_ideal ? st.s0 - st.s1 * dm.quotient : st.s0 - dm.quotient * st.s1;
        SkewPolynomial t2 = right_ideal ? st.t0 - st.t1 * dm.quotient : st.t0 - dm.quotient * st.t1;
        st.r0 = std::move(st.r1);
        st.r1 = std::move(dm.remainder);
        st.s0 = std::move(st.s1);
        st.s1 = std::move(s2);
        st.t0 = std::move(st.t1);
        st.t1 = std::move(t2);
    }
    return st;
}

void require_not_both_zero(const SkewPolynomial& P, const SkewPolynomial& Q) {
    require_same_field(P.field(), Q.field());
    if (P.is_zero() && Q.is_zero()) throw Error(ErrorCode::BothZero, "gcd of two zero polynomials");
}

}  // namespace

Bezout gcrd(const SkewPolynomial& P, const SkewPolynomial& Q) {
    require_not_both_zero(P, Q);
    auto st = euclid(P, Q, false);
    Element li = st.r0.leading_coefficient().inverse();
    return {st.r0.scaled_left(li), st.s0.scaled_left(li), st.t0.scaled_left(li)};
}

Bezout gcld(const SkewPolynomial& P, const SkewPolynomial& Q) {
    require_not_both_zero(P, Q);
    auto st = euclid(P, Q, true);
    auto n = static_cast<long long>(st.r0.degree().value());
    Element w = st.r0.leading_coefficient().inverse().sigma_power(-n);
    return {st.r0.scaled_right(w), st.s0.scaled_right(w), st.t0.scaled_right(w)};
}

CommonMultiple lclm_with_cofactors(const SkewPolynomial& P, const SkewPolynomial& Q) {
    require_same_field(P.field(), Q.field());
    const auto& F = P.field();
    if (P.is_zero() || Q.is_zero()) return {SkewPolynomial(F), SkewPolynomial(F), SkewPolynomial(F)};
    auto st = euclid(P, Q, false);
    // s1 P + t1 Q = 0 at termination.
    SkewPolynomial M = st.s1 * P;
    Element li = M.leading_coefficient().inverse();
    return {M.scaled_left(li), st.s1.scaled_left(li), (-st.t1).scaled_left(li)};
}

CommonMultiple lcrm_with_cofactors(const SkewPolynomial& P, const SkewPolynomial& Q) {
    require_same_field(P.field(), Q.field());
    const auto& F = P.field();
    if (P.is_zero() || Q.is_zero()) return {SkewPolynomial(F), SkewPolynomial(F), SkewPolynomial(F)};
    auto st = euclid(P, Q, true);
    SkewPolynomial M = P * st.s1;
    auto n = static_cast<long long>(M.degree().value());
    Element w = M.leading_coefficient().inverse().sigma_power(-n);
    return {M.scaled_right(w), st.s1.scaled_right(w), (-st.t1).scaled_right(w)};
}

SkewPolynomial lclm(const SkewPolynomial& P, const SkewPolynomial& Q) { return lclm_with_cofactors(P, Q).multiple; }

SkewPolynomial lcrm(const SkewPolynomial& P, const SkewPolynomial& Q) { return lcrm_with_cofactors(P, Q).multiple; }

/* anti-automorphisms */

Element Alpha0::apply(const Element& a) const {
    switch (kind) {
        case Kind::Identity: return a;
        case Kind::Sigma: return a.sigma();
        case Kind::Frobenius: {
            if (!a.field()->is_finite())
                throw Error(ErrorCode::InvalidAlpha0, "Frobenius powers exist only on finite fields");
            return as_finite(a.field()).frobenius(a, power);
        }
    }
    return a;
}

std::string Alpha0::to_string() const {
    switch (kind) {
        case Kind::Identity: return "identity";
        case Kind::Sigma: return "sigma";
        case Kind::Frobenius: return "frobenius^" + std::to_string(power);
    }
    return "?";
}

void check_alpha0(const FieldPtr& field, const Alpha0& alpha0) {
    if (alpha0.kind == Alpha0::Kind::Frobenius && !field->is_finite())
        throw Error(ErrorCode::InvalidAlpha0, "Frobenius powers exist only on finite fields");
    std::vector<Element> probes{field->one(), field->from_integer(2)};
    if (!field->generator_symbol().empty()) probes.push_back(field->generator());
    std::mt19937_64 rng(0x5eed);
    for (int i = 0; i < 16; ++i) probes.push_back(field->random(rng));
    for (const auto& b : probes)
        if (!(alpha0.apply(b.sigma()).sigma() == alpha0.apply(b)))
            throw Error(ErrorCode::InvalidAlpha0,
                        "alpha0 = " + alpha0.to_string() + " violates sigma alpha0 sigma = alpha0 at " + b.to_string());
}

SkewPolynomial anti_automorphism_apply(const SkewPolynomial& P, const Alpha0& alpha0, const Element& a0) {
    require_same_field(P.field(), a0.field());
    if (a0.is_zero()) throw Error(ErrorCode::ZeroElement, "a0 must be nonzero");
    check_alpha0(P.field(), alpha0);
    const auto& b = P.coefficients();
    auto n = norms(b.size(), a0);
    std::vector<Element> c;
    c.reserve(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        c.push_back(alpha0.apply(b[i]).sigma_power(static_cast<long long>(i)) * n[i]);
    return SkewPolynomial(P.field(), std::move(c));
}

}  // namespace skew
