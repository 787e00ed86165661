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

#include "skew/roots.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "skew/finite_field.hpp"
#include "skew/linalg.hpp"
#include "skew/pdep.hpp"
#include "skew/sigma_field.hpp"

namespace skew {

/* OrdinaryPolynomial */

OrdinaryPolynomial::OrdinaryPolynomial(FieldPtr field) : field_(std::move(field)) {}

OrdinaryPolynomial::OrdinaryPolynomial(FieldPtr field, std::vector<Element> coefficients)
    : field_(std::move(field)), c_(std::move(coefficients)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Element OrdinaryPolynomial::operator()(const Element& x) const {
    Element acc = field_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

OrdinaryPolynomial OrdinaryPolynomial::derivative() const {
    std::vector<Element> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(field_->from_integer(static_cast<long long>(i)) * c_[i]);
    return OrdinaryPolynomial(field_, std::move(d));
}

OrdinaryPolynomial OrdinaryPolynomial::monic() const {
    if (c_.empty()) return *this;
    Element li = c_.back().inverse();
    std::vector<Element> d;
    for (const auto& c : c_) d.push_back(c * li);
    return OrdinaryPolynomial(field_, std::move(d));
}

std::string OrdinaryPolynomial::to_string(std::string_view var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string s = c_[i].to_string();
        bool simple = s.find_first_of("+-", 1) == std::string::npos;
        std::string term;
        std::string mono = i == 0 ? "" : (i == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(i));
        if (i == 0)
            term = simple ? s : "(" + s + ")";
        else if (s == "1")
            term = mono;
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

bool operator==(const OrdinaryPolynomial& a, const OrdinaryPolynomial& b) {
    if (!same_field(a.field_, b.field_) || a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

OrdinaryPolynomial remainder(const OrdinaryPolynomial& a, const OrdinaryPolynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "division by the zero polynomial");
    std::vector<Element> r = a.coefficients();
    const auto& d = b.coefficients();
    Element li = d.back().inverse();
    while (r.size() >= d.size()) {
        Element c = r.back() * li;
        std::size_t shift = r.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
        r.pop_back();
        while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    return OrdinaryPolynomial(a.field(), std::move(r));
}

OrdinaryPolynomial gcd(const OrdinaryPolynomial& a, const OrdinaryPolynomial& b) {
    OrdinaryPolynomial x = a, y = b;
    while (!y.is_zero()) {
        auto r = remainder(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

/* enumeration */

RootReport enumerate_roots(const SkewPolynomial& P, unsigned jobs) {
    const auto& field = P.field();
    const auto& F = as_finite(field);
    if (P.is_zero()) throw Error(ErrorCode::InvalidArgument, "every element is a root of the zero polynomial");
    const std::uint64_t q = F.order();
    jobs = std::max(1u, std::min<unsigned>(jobs, 64));
    std::vector<std::vector<Element>> found(jobs);
    auto work = [&](unsigned t) {
        std::uint64_t lo = q * t / jobs, hi = q * (t + 1) / jobs;
        for (std::uint64_t i = lo; i < hi; ++i) {
            Element a = field->element_at(i);
            if (eval_right(P, a).is_zero()) found[t].push_back(std::move(a));
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    RootReport rep{P, {}, 0, {}};
    for (auto& part : found)
        for (auto& r : part) rep.roots.push_back(std::move(r));
    std::sort(rep.roots.begin(), rep.roots.end());

    std::vector<char> assigned(rep.roots.size(), 0);
    for (std::size_t i = 0; i < rep.roots.size(); ++i) {
        if (assigned[i]) continue;
        auto cls = conjugacy_class(rep.roots[i]);
        std::size_t count = 0;
        for (std::size_t j = i; j < rep.roots.size(); ++j)
            if (!assigned[j] && std::binary_search(cls.begin(), cls.end(), rep.roots[j])) {
                assigned[j] = 1;
                ++count;
            }
        rep.per_class_counts.emplace_back(cls.front(), count);
    }
    std::sort(rep.per_class_counts.begin(), rep.per_class_counts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rep.classes_hit = rep.per_class_counts.size();
    return rep;
}

/* E(P, 1) */

std::vector<Element> fixed_field_elements(const FieldPtr& field) {
    std::vector<Element> out;
    for (auto& a : field->elements())
        if (a.sigma() == a) out.push_back(a);
    return out;
}

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Elements as F_p coordinate rows of a matrix.
std::size_t fp_rank(const FiniteSigmaField& F, const std::vector<Element>& v) {
    ModMatrix m;
    for (const auto& e : v) m.push_back(F.coordinates(e));
    return rank_mod_p(std::move(m), F.p());
}

}  // namespace

SemilinearKernel class_roots_via_kernel(const SkewPolynomial& P) {
    const auto& field = P.field();
    const auto& F = as_finite(field);
    if (P.is_zero()) throw Error(ErrorCode::InvalidArgument, "kernel of the zero polynomial is all of K");
    const unsigned k = F.degree();
    const std::uint64_t p = F.p();
    auto lambda = [&](const Element& x) {
        Element acc = field->zero(), s = x;
        for (std::size_t i = 0; i < P.size(); ++i) {
            if (i) s = s.sigma();
            acc += P.coefficient(i) * s;
        }
        return acc;
    };

    // Columns Lambda(u^j) of the F_p-linear map.
    ModMatrix M(k, std::vector<std::uint64_t>(k, 0));
    for (unsigned j = 0; j < k; ++j) {
        std::vector<std::uint64_t> e(k, 0);
        e[j] = 1;
        auto col = F.coordinates(lambda(F.from_coordinates(e)));
        for (unsigned i = 0; i < k; ++i) M[i][j] = col[i];
    }
    auto fp_basis = kernel_mod_p(M, k, p);

    auto fixed = fixed_field_elements(field);
    SemilinearKernel out;
    out.fixed_field_size = F.fixed_field_size();
    if (fixed.size() != out.fixed_field_size)
        throw Error(ErrorCode::InternalError, "fixed field size disagrees with p^gcd(n,k)");
    const std::size_t g = std::gcd(F.frobenius_power() % k, k);

    // w with 1, w, .., w^(g-1) an F_p-basis of F.
    Element w = field->one();
    for (const auto& f : fixed) {
        std::vector<Element> pw;
        Element t = field->one();
        for (std::size_t i = 0; i < g; ++i, t *= f) pw.push_back(t);
        if (fp_rank(F, pw) == g) {
            w = f;
            break;
        }
    }

    std::vector<Element> span;
    for (const auto& v : fp_basis) {
        Element x = F.from_coordinates(v);
        auto trial = span;
        trial.push_back(x);
        if (fp_rank(F, trial) == span.size()) continue;
        out.basis.push_back(x);
        Element t = x;
        for (std::size_t i = 0; i < g; ++i, t *= w) span.push_back(t);
    }
    out.dimension = out.basis.size();
    if (out.dimension * g != fp_basis.size())
        throw Error(ErrorCode::InternalError, "kernel is not a vector space over the fixed field");

    // All nonzero F_p-combinations of the kernel basis.
    const std::size_t dim = fp_basis.size();
    std::vector<std::uint64_t> digits(dim, 0);
    const std::uint64_t total = ipow(p, dim);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::size_t j = 0;
        while (++digits[j] == p) digits[j++] = 0;
        std::vector<std::uint64_t> c(k, 0);
        for (std::size_t b = 0; b < dim; ++b)
            if (digits[b])
                for (unsigned i = 0; i < k; ++i) c[i] = (c[i] + digits[b] * fp_basis[b][i]) % p;
        Element x = F.from_coordinates(c);
        out.class_one_roots.push_back(x.sigma() / x);
    }
    std::sort(out.class_one_roots.begin(), out.class_one_roots.end());
    out.class_one_roots.erase(std::unique(out.class_one_roots.begin(), out.class_one_roots.end()),
                              out.class_one_roots.end());
    const std::uint64_t f = out.fixed_field_size;
    out.predicted_count = (ipow(f, out.dimension) - 1) / (f - 1);
    return out;
}

/* Frobenius reduction */

std::uint64_t frobenius_exponent(std::uint64_t p, unsigned n, std::size_t i) {
    // 1 + p^n + ... + p^((i-1)n)
    const std::uint64_t pn = ipow(p, n);
    std::uint64_t e = 0, t = 1;
    for (std::size_t j = 0; j < i; ++j) {
        if (e > (std::uint64_t{1} << 40)) throw Error(ErrorCode::DegreeCapExceeded, "Frobenius exponent too large");
        e += t;
        t *= pn;
    }
    return e;
}

namespace {

const FiniteSigmaField& frobenius_field(const FieldPtr& field) {
    auto f = dynamic_cast<const FiniteSigmaField*>(field.get());
    if (!f) throw Error(ErrorCode::WrongFieldKind, "Frobenius reduction needs a finite field with sigma = Frob^n");
    return *f;
}

constexpr std::uint64_t kMaxDenseDegree = std::uint64_t{1} << 22;

}  // namespace

OrdinaryPolynomial frobenius_reduce(const SkewPolynomial& P) {
    const auto& F = frobenius_field(P.field());
    if (P.is_zero()) return OrdinaryPolynomial(P.field());
    const std::uint64_t top = frobenius_exponent(F.p(), F.frobenius_power(), P.size() - 1);
    if (top > kMaxDenseDegree) throw Error(ErrorCode::DegreeCapExceeded, "reduced polynomial too large");
    std::vector<Element> c(top + 1, P.field()->zero());
    for (std::size_t i = 0; i < P.size(); ++i) c[frobenius_exponent(F.p(), F.frobenius_power(), i)] = P.coefficient(i);
    return OrdinaryPolynomial(P.field(), std::move(c));
}

ClosureCount closure_root_count(const SkewPolynomial& P) {
    const auto& F = frobenius_field(P.field());
    if (P.is_zero() || P.degree() == Degree(0))
        throw Error(ErrorCode::DegreeMismatch, "closure root count needs degree at least 1");
    if (P.coefficient(0).is_zero()) throw Error(ErrorCode::ZeroConstantTerm, "P(0) must be nonzero");
    auto f = frobenius_reduce(P);
    auto g = gcd(f, f.derivative());
    if (g.degree() > Degree(0)) throw Error(ErrorCode::SeparabilityFailure, "reduced polynomial is not separable");
    const std::size_t m = P.degree().value();
    ClosureCount out;
    out.count = f.degree().value();
    out.formula = (ipow(F.p(), F.frobenius_power() * m) - 1) / (ipow(F.p(), F.frobenius_power()) - 1);
    return out;
}

/* degree-2 sweep */

Degree2Report check_degree2_closedness(const FieldPtr& field, std::uint64_t target) {
    as_finite(field);
    auto all = field->elements();
    const std::size_t q = all.size();
    std::vector<Element> n2(q);
    for (std::size_t i = 0; i < q; ++i) n2[i] = all[i].sigma() * all[i];
    auto class_one = conjugacy_class(field->one());

    Degree2Report rep;
    rep.target = target;
    rep.min_count = UINT64_MAX;
    for (std::size_t i2 = 1; i2 < q; ++i2)
        for (std::size_t i1 = 0; i1 < q; ++i1)
            for (std::size_t i0 = 1; i0 < q; ++i0) {
                std::uint64_t count = 0, in_c1 = 0;
                for (std::size_t x = 0; x < q; ++x) {
                    if (!(all[i0] + all[i1] * all[x] + all[i2] * n2[x]).is_zero()) continue;
                    ++count;
                    if (std::binary_search(class_one.begin(), class_one.end(), all[x])) ++in_c1;
                }
                SkewPolynomial P(field, {all[i0], all[i1], all[i2]});
                if (class_roots_via_kernel(P).predicted_count != in_c1) rep.kernel_consistent = false;
                ++rep.polynomials;
                ++rep.histogram[count];
                rep.min_count = std::min(rep.min_count, count);
                rep.max_count = std::max(rep.max_count, count);
            }
    if (rep.polynomials == 0) rep.min_count = 0;
    rep.reaches_target = rep.min_count >= target;
    return rep;
}

SkewPolynomial vanishing_polynomial(const FieldPtr& field) {
    auto alg = minimal_polynomial(field, field->elements());
    if (alg.minimal_poly.is_zero()) throw Error(ErrorCode::InternalError, "vanishing polynomial is zero");
    return alg.minimal_poly;
}

}  // namespace skew
