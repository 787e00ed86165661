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

#include "skew/extension.hpp"

#include <algorithm>
#include <optional>

#include "skew/linalg.hpp"
#include "skew/sigma_field.hpp"

namespace skew {

/* MultiPoly */

MultiPoly::MultiPoly(FieldPtr field, std::size_t vars) : field_(std::move(field)), vars_(vars) {}

MultiPoly MultiPoly::constant(const Element& c, std::size_t vars) {
    MultiPoly m(c.field(), vars);
    m.add_term(Exponents(vars, 0), c);
    return m;
}

MultiPoly MultiPoly::variable(const FieldPtr& field, std::size_t vars, std::size_t i) {
    if (i >= vars) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    MultiPoly m(field, vars);
    Exponents e(vars, 0);
    e[i] = 1;
    m.add_term(e, field->one());
    return m;
}

void MultiPoly::add_term(const Exponents& e, const Element& c) {
    if (e.size() != vars_) throw Error(ErrorCode::InvalidArgument, "exponent vector has wrong length");
    require_same_field(field_, c.field());
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_same_field(field_, o.field_);
    MultiPoly r(field_, vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(vars_);
            for (std::size_t i = 0; i < vars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const Element& s) const {
    MultiPoly r(field_, vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, s * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(field_->one(), vars_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < vars_; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += '*';
            mono += "y" + std::to_string(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string s = c.to_string();
        bool simple = s.find_first_of("+-", 1) == std::string::npos;
        std::string term;
        if (mono.empty())
            term = simple ? s : "(" + s + ")";
        else if (s == "1")
            term = mono;
        else if (s == "-1")
            term = "-" + mono;
        else
            term = (simple ? s : "(" + s + ")") + "*" + mono;
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    for (; i != a.terms_.end(); ++i, ++j)
        if (i->first != j->first || !(i->second == j->second)) return false;
    return true;
}

/* VnElement */

bool VnElement::is_zero() const {
    return std::all_of(d.begin(), d.end(), [](const Element& x) { return x.is_zero(); });
}

MultiPoly VnElement::to_multipoly() const {
    const std::size_t vars = n();
    MultiPoly m(d.front().field(), vars);
    for (std::size_t j = 0; j <= vars; ++j) {
        MultiPoly::Exponents e(vars, 0);
        for (std::size_t i = 0; i < j; ++i) e[i] = 1;
        m.add_term(e, d[j]);
    }
    return m;
}

std::string VnElement::to_string() const { return to_multipoly().to_string(); }

bool operator==(const VnElement& a, const VnElement& b) {
    if (a.d.size() != b.d.size()) return false;
    for (std::size_t i = 0; i < a.d.size(); ++i)
        if (!(a.d[i] == b.d[i])) return false;
    return true;
}

/* MultiRational */

namespace {

bool factor_less(const VnElement& a, const VnElement& b) {
    return std::lexicographical_compare(a.d.begin(), a.d.end(), b.d.begin(), b.d.end(),
                                        [](const Element& x, const Element& y) { return x < y; });
}

// Multiset union (max multiplicity) of two sorted factor lists.
std::vector<VnElement> factor_union(const std::vector<VnElement>& a, const std::vector<VnElement>& b) {
    std::vector<VnElement> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && factor_less(a[i], b[j]))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || factor_less(b[j], a[i])) {
            out.push_back(b[j++]);
        } else {
            out.push_back(a[i++]);
            ++j;
        }
    }
    return out;
}

// Factors of the sorted list big that are missing from its sub-multiset small.
std::vector<VnElement> factor_difference(const std::vector<VnElement>& big, const std::vector<VnElement>& small) {
    std::vector<VnElement> out;
    std::size_t j = 0;
    for (const auto& f : big) {
        if (j < small.size() && f == small[j])
            ++j;
        else
            out.push_back(f);
    }
    return out;
}

MultiPoly expand(const FieldPtr& field, std::size_t vars, const std::vector<VnElement>& factors) {
    MultiPoly r = MultiPoly::constant(field->one(), vars);
    for (const auto& f : factors) r = r * f.to_multipoly();
    return r;
}

// q with a = q f when f divides a exactly, lex-leading-term division.
std::optional<MultiPoly> exact_quotient(MultiPoly a, const MultiPoly& f) {
    MultiPoly q(a.field(), a.vars());
    const auto& [fe, fc] = *f.terms().rbegin();
    while (!a.is_zero()) {
        const auto [ae, ac] = *a.terms().rbegin();
        MultiPoly::Exponents e(ae.size());
        for (std::size_t i = 0; i < ae.size(); ++i) {
            if (ae[i] < fe[i]) return std::nullopt;
            e[i] = ae[i] - fe[i];
        }
        MultiPoly t(a.field(), a.vars());
        t.add_term(e, ac / fc);
        q = q + t;
        a = a - t * f;
    }
    return q;
}

}  // namespace

void MultiRational::cancel() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    std::vector<VnElement> kept;
    for (auto& f : den_) {
        if (auto q = exact_quotient(num_, f.to_multipoly()))
            num_ = std::move(*q);
        else
            kept.push_back(std::move(f));
    }
    den_ = std::move(kept);
}

MultiRational::MultiRational(MultiPoly numerator) : num_(std::move(numerator)) {}

MultiRational::MultiRational(MultiPoly numerator, std::vector<VnElement> denominator) : num_(std::move(numerator)) {
    for (auto& f : denominator) {
        if (f.d.size() != num_.vars() + 1)
            throw Error(ErrorCode::DenominatorNotInS, "denominator factor is not an element of V_n");
        if (f.is_zero()) throw Error(ErrorCode::DenominatorNotInS, "zero denominator factor");
        std::size_t top = f.d.size();
        while (f.d[top - 1].is_zero()) --top;
        Element lead = f.d[top - 1];
        Element li = lead.inverse();
        for (auto& x : f.d) x *= li;
        num_ = num_.scaled(li);
        den_.push_back(std::move(f));
    }
    std::sort(den_.begin(), den_.end(), factor_less);
    cancel();
}

MultiPoly MultiRational::expanded_denominator() const { return expand(num_.field(), num_.vars(), den_); }

MultiRational MultiRational::operator+(const MultiRational& o) const {
    auto common = factor_union(den_, o.den_);
    const auto& F = num_.field();
    MultiPoly n = num_ * expand(F, num_.vars(), factor_difference(common, den_)) +
                  o.num_ * expand(F, num_.vars(), factor_difference(common, o.den_));
    MultiRational r(std::move(n));
    r.den_ = std::move(common);
    r.cancel();
    return r;
}

MultiRational MultiRational::operator-(const MultiRational& o) const {
    MultiRational neg = o;
    neg.num_ = o.num_.scaled(-o.num_.field()->one());
    return *this + neg;
}

MultiRational MultiRational::operator*(const MultiRational& o) const {
    MultiRational r(num_ * o.num_);
    r.den_ = den_;
    r.den_.insert(r.den_.end(), o.den_.begin(), o.den_.end());
    std::sort(r.den_.begin(), r.den_.end(), factor_less);
    r.cancel();
    return r;
}

MultiRational MultiRational::divided_by(const VnElement& s) const {
    MultiRational f(MultiPoly::constant(num_.field()->one(), num_.vars()), {s});
    return *this * f;
}

std::string MultiRational::to_string() const {
    std::string n = num_.to_string();
    if (den_.empty()) return n;
    std::string d;
    for (const auto& f : den_) {
        if (!d.empty()) d += "*";
        d += "(" + f.to_string() + ")";
    }
    return "(" + n + ")/" + (den_.size() == 1 ? d : "(" + d + ")");
}

bool operator==(const MultiRational& a, const MultiRational& b) {
    auto common = factor_union(a.den_, b.den_);
    const auto& F = a.num_.field();
    return a.num_ * expand(F, a.num_.vars(), factor_difference(common, a.den_)) ==
           b.num_ * expand(F, b.num_.vars(), factor_difference(common, b.den_));
}

/* K[P] */

std::vector<Element> kp_constants(const SkewPolynomial& P, const ExtensionOptions& opt) {
    if (P.is_zero() || P.degree() == Degree(0))
        throw Error(ErrorCode::DegreeMismatch, "K[P] needs a polynomial of degree at least 1");
    if (!P.is_monic()) throw Error(ErrorCode::NotMonic, "K[P] needs a monic polynomial");
    if (P.degree().value() > opt.max_degree)
        throw Error(ErrorCode::DegreeCapExceeded,
                    "degree " + P.degree().to_string() + " exceeds the cap " + std::to_string(opt.max_degree));
    if (P.coefficient(0).is_zero())
        throw Error(ErrorCode::ZeroConstantTerm, "P lies in T K[T; sigma]; K[P] needs P(0) != 0");
    std::vector<Element> c;
    for (std::size_t i = 0; i + 1 < P.size(); ++i) c.push_back(-P.coefficient(i));
    return c;
}

VnElement l_map(const VnElement& Y, const SkewPolynomial& P) {
    auto c = kp_constants(P);
    const std::size_t n = c.size() - 1;
    if (Y.d.size() != n + 1) throw Error(ErrorCode::DegreeMismatch, "Y is not an element of V_n for this P");
    Element sdn = Y.d[n].sigma();
    VnElement out;
    out.d.push_back(sdn * c[0]);
    for (std::size_t j = 1; j <= n; ++j) out.d.push_back(Y.d[j - 1].sigma() + sdn * c[j]);
    return out;
}

namespace {

VnElement y_star(const FieldPtr& field, std::size_t n) {
    VnElement y;
    y.d.assign(n + 1, field->zero());
    y.d[n] = field->one();
    return y;
}

}  // namespace

MultiRational phi_apply(const MultiPoly& q, const SkewPolynomial& P) {
    auto c = kp_constants(P);
    const std::size_t n = c.size() - 1;
    if (q.vars() != n) throw Error(ErrorCode::DegreeMismatch, "polynomial has the wrong number of variables");
    const auto& F = q.field();
    if (n == 0) {
        MultiPoly r(F, 0);
        for (const auto& [e, a] : q.terms()) r.add_term(e, a.sigma());
        return MultiRational(std::move(r));
    }
    VnElement ys = y_star(F, n);
    MultiPoly lys = l_map(ys, P).to_multipoly();
    unsigned top = 0;
    for (const auto& [e, a] : q.terms()) top = std::max(top, e[n - 1]);
    // phi(y_i) = y_{i+1} for i < n-1 and phi(y_{n-1}) = L(Y*)/Y*; clear to the common (Y*)^top.
    MultiPoly num(F, n);
    MultiPoly ysp = ys.to_multipoly();
    for (const auto& [e, a] : q.terms()) {
        MultiPoly::Exponents shifted(n, 0);
        for (std::size_t i = 0; i + 1 < n; ++i) shifted[i + 1] = e[i];
        MultiPoly t(F, n);
        t.add_term(shifted, a.sigma());
        num = num + t * lys.pow(e[n - 1]) * ysp.pow(top - e[n - 1]);
    }
    return MultiRational(std::move(num), std::vector<VnElement>(top, ys));
}

MultiRational sigma_P_apply(const MultiRational& x, const SkewPolynomial& P) {
    auto c = kp_constants(P);
    const std::size_t n = c.size() - 1;
    const auto& F = x.numerator().field();
    if (n == 0) {
        std::vector<VnElement> den;
        for (const auto& f : x.denominator()) den.push_back(VnElement{{f.d[0].sigma()}});
        return MultiRational(phi_apply(x.numerator(), P).numerator(), std::move(den));
    }
    // phi(s) = L(s)/y_0 for s in V_n.
    MultiRational r = phi_apply(x.numerator(), P);
    MultiPoly y0 = MultiPoly::variable(F, n, 0);
    MultiRational lifted(y0.pow(static_cast<unsigned>(x.denominator().size())));
    r = r * lifted;
    for (const auto& s : x.denominator()) {
        VnElement ls = l_map(s, P);
        if (ls.is_zero()) throw Error(ErrorCode::DenominatorNotInS, "L maps a denominator factor to zero");
        r = r.divided_by(ls);
    }
    return r;
}

namespace {

// Rank over K of a list of elements of K(P).
std::size_t k_rank(const std::vector<MultiRational>& v) {
    std::vector<VnElement> common;
    for (const auto& x : v) common = factor_union(common, x.denominator());
    std::vector<MultiPoly> nums;
    std::map<MultiPoly::Exponents, std::size_t> cols;
    for (const auto& x : v) {
        const auto& F = x.numerator().field();
        nums.push_back(x.numerator() * expand(F, x.numerator().vars(), factor_difference(common, x.denominator())));
        for (const auto& [e, c] : nums.back().terms()) cols.emplace(e, cols.size());
    }
    if (nums.empty()) return 0;
    const auto& F = nums.front().field();
    Matrix m(nums.size(), std::vector<Element>(cols.size(), F->zero()));
    for (std::size_t i = 0; i < nums.size(); ++i)
        for (const auto& [e, c] : nums[i].terms()) m[i][cols[e]] = c;
    return rank(std::move(m));
}

}  // namespace

KPVerification verify_root_in_KP(const SkewPolynomial& P, const ExtensionOptions& opt) {
    auto c = kp_constants(P, opt);
    const std::size_t n = c.size() - 1;
    const auto& F = P.field();
    KPVerification out;
    if (n == 0) {
        // K[P] = K and y_0 is the root c_0 itself.
        Element value = eval_right(P, c[0]);
        out.root = value.is_zero();
        out.minimal = true;
        out.norms = {F->one().to_string(), c[0].to_string()};
        out.value = value.to_string();
        return out;
    }
    MultiRational y0(MultiPoly::variable(F, n, 0));
    std::vector<MultiRational> N{MultiRational(MultiPoly::constant(F->one(), n))};
    for (std::size_t i = 1; i <= n + 1; ++i) N.push_back(sigma_P_apply(N.back(), P) * y0);
    MultiRational value(MultiPoly(F, n));
    for (std::size_t i = 0; i < P.size(); ++i) value = value + N[i] * MultiRational(MultiPoly::constant(P.coefficient(i), n));
    out.root = value.is_zero();
    out.minimal = k_rank(std::vector<MultiRational>(N.begin(), N.begin() + static_cast<long>(n + 1))) == n + 1;
    for (const auto& x : N) out.norms.push_back(x.to_string());
    for (std::size_t i = 0; i < n; ++i)
        out.sigma_table.push_back(sigma_P_apply(MultiRational(MultiPoly::variable(F, n, i)), P).to_string());
    out.value = value.to_string();
    return out;
}

/* psi_a */

namespace {

Element psi_poly(const MultiPoly& q, const std::vector<Element>& point, const FieldEmbedding& emb) {
    Element acc = emb.target()->zero();
    for (const auto& [e, c] : q.terms()) {
        Element t = emb(c);
        for (std::size_t i = 0; i < e.size(); ++i) t *= point[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

std::vector<Element> psi_point(const Element& a, std::size_t n) {
    std::vector<Element> pt;
    Element s = a;
    for (std::size_t i = 0; i < n; ++i) {
        pt.push_back(s);
        s = s.sigma();
    }
    return pt;
}

}  // namespace

Element psi_apply(const MultiRational& x, const Element& a, const FieldEmbedding& emb) {
    const std::size_t n = x.numerator().vars();
    auto pt = psi_point(a, n);
    Element v = psi_poly(x.numerator(), pt, emb);
    for (const auto& s : x.denominator()) {
        Element d = psi_poly(s.to_multipoly(), pt, emb);
        if (d.is_zero())
            throw Error(ErrorCode::NotMinimal, "psi_a sends the denominator " + s.to_string() + " to zero");
        v = v / d;
    }
    return v;
}

MultiRational random_multirational(const FieldPtr& field, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> terms(1, 3), expo(0, 2), dens(0, 2);
    MultiPoly num(field, n);
    for (int t = terms(rng); t > 0; --t) {
        MultiPoly::Exponents e(n);
        for (auto& x : e) x = static_cast<unsigned>(expo(rng));
        num.add_term(e, field->random_nonzero(rng));
    }
    std::vector<VnElement> den;
    for (int t = dens(rng); t > 0; --t) {
        VnElement f;
        do {
            f.d.clear();
            for (std::size_t j = 0; j <= n; ++j) f.d.push_back(field->random(rng));
        } while (f.is_zero());
        den.push_back(std::move(f));
    }
    return MultiRational(std::move(num), std::move(den));
}

PsiReport psi_a_check(const SkewPolynomial& P, const Element& a, const FieldEmbedding& emb, std::size_t samples,
                      std::uint64_t seed) {
    require_same_field(P.field(), emb.source());
    require_same_field(a.field(), emb.target());
    if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "a must be nonzero");
    auto c = kp_constants(P);
    const std::size_t n = c.size() - 1;
    if (!eval_right(emb(P), a).is_zero()) throw Error(ErrorCode::NotMinimal, a.to_string() + " is not a root of P");
    if (emb.source_rank(norms(n + 1, a)) != n + 1)
        throw Error(ErrorCode::NotMinimal, "a has a minimal polynomial of degree below deg P");

    PsiReport rep;
    std::mt19937_64 rng(seed);
    const auto& K = P.field();
    for (std::size_t s = 0; s < samples; ++s) {
        auto x = random_multirational(K, n, rng);
        auto y = random_multirational(K, n, rng);
        try {
            Element px = psi_apply(x, a, emb), py = psi_apply(y, a, emb);
            if (!(psi_apply(x + y, a, emb) == px + py)) rep.additive = false;
            if (!(psi_apply(x * y, a, emb) == px * py)) rep.multiplicative = false;
            if (!(psi_apply(sigma_P_apply(x, P), a, emb) == px.sigma())) rep.intertwines = false;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotMinimal) throw;
            rep.denominators_nonzero = false;
        }
        ++rep.samples;
    }
    return rep;
}

}  // namespace skew
