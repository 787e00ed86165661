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

#include "skew/fraction_field.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "skew/finite_field.hpp"
#include "skew/pdep.hpp"
#include "skew/roots.hpp"
#include "skew/sigma_field.hpp"

namespace skew {

OreFraction::OreFraction(SkewPolynomial A, SkewPolynomial B) : A_(std::move(A)), B_(std::move(B)) {
    require_same_field(A_.field(), B_.field());
    if (B_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "fraction with zero denominator");
}

OreFraction OreFraction::from_polynomial(const SkewPolynomial& A) {
    return OreFraction(A, SkewPolynomial::constant(A.field()->one()));
}

OreFraction OreFraction::from_left(const SkewPolynomial& P, const SkewPolynomial& Q) {
    require_same_field(P.field(), Q.field());
    if (P.is_zero()) throw Error(ErrorCode::ZeroDenominator, "fraction with zero denominator");
    if (Q.is_zero()) return OreFraction(Q, SkewPolynomial::constant(Q.field()->one()));
    // P cp = Q cq, so P^-1 Q = cp cq^-1.
    auto cm = lcrm_with_cofactors(P, Q);
    return OreFraction(cm.cofactor_p, cm.cofactor_q);
}

OreFraction OreFraction::reduced() const {
    const auto& F = field();
    if (A_.is_zero()) return OreFraction(A_, SkewPolynomial::constant(F->one()));
    SkewPolynomial G = gcrd(A_, B_).gcd;
    SkewPolynomial A = right_divmod(A_, G).quotient;
    SkewPolynomial B = right_divmod(B_, G).quotient;
    auto n = static_cast<long long>(B.degree().value());
    Element u = B.leading_coefficient().inverse().sigma_power(-n);
    return OreFraction(A.scaled_right(u), B.scaled_right(u));
}

long long OreFraction::degree() const {
    if (A_.is_zero()) throw Error(ErrorCode::InvalidArgument, "degree of the zero fraction");
    return static_cast<long long>(A_.degree().value()) - static_cast<long long>(B_.degree().value());
}

std::string OreFraction::to_string() const {
    if (B_.degree() == 0 && B_.coefficient(0).is_one()) return A_.to_string();
    std::string a = A_.to_string(), b = B_.to_string();
    if (a.find(' ') != std::string::npos) a = "(" + a + ")";
    if (b.front() != '(' || b.find(' ') != std::string::npos) b = "(" + b + ")";
    return a + "*" + b + "^-1";
}

bool operator==(const OreFraction& x, const OreFraction& y) {
    if (!same_field(x.field(), y.field())) return false;
    // A B^-1 = C D^-1 iff A D' = C B' where B B' = D D'.
    auto cm = lcrm_with_cofactors(x.B_, y.B_);
    return x.A_ * cm.cofactor_p == y.A_ * cm.cofactor_q;
}

OreFraction frac_add(const OreFraction& x, const OreFraction& y) {
    require_same_field(x.field(), y.field());
    auto cm = lcrm_with_cofactors(x.denominator(), y.denominator());
    return OreFraction(x.numerator() * cm.cofactor_p + y.numerator() * cm.cofactor_q, cm.multiple).reduced();
}

OreFraction frac_neg(const OreFraction& x) { return OreFraction(-x.numerator(), x.denominator()); }

OreFraction frac_sub(const OreFraction& x, const OreFraction& y) { return frac_add(x, frac_neg(y)); }

OreFraction frac_mul(const OreFraction& x, const OreFraction& y) {
    require_same_field(x.field(), y.field());
    const auto& F = x.field();
    if (x.is_zero() || y.is_zero()) return OreFraction(SkewPolynomial(F), SkewPolynomial::constant(F->one()));
    // B^-1 C = cb cc^-1 from B cb = C cc.
    auto cm = lcrm_with_cofactors(x.denominator(), y.numerator());
    return OreFraction(x.numerator() * cm.cofactor_p, y.denominator() * cm.cofactor_q).reduced();
}

OreFraction frac_inv(const OreFraction& x) {
    if (x.is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of the zero fraction");
    return OreFraction(x.denominator(), x.numerator()).reduced();
}

/* series */

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Element& c) { return c.is_zero(); });
}

void TruncatedSeries::normalize() {
    if (is_zero()) return;
    auto first = std::find_if(coeffs.begin(), coeffs.end(), [](const Element& c) { return !c.is_zero(); });
    valuation += first - coeffs.begin();
    coeffs.erase(coeffs.begin(), first);
}

Element TruncatedSeries::coefficient(long long e) const {
    if (e < valuation) return field->zero();
    if (e >= end())
        throw Error(ErrorCode::InvalidArgument,
                    "coefficient of T^" + std::to_string(e) + " is past the precision " + std::to_string(end()));
    return coeffs[static_cast<std::size_t>(e - valuation)];
}

std::string TruncatedSeries::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        long long e = valuation + static_cast<long long>(i);
        std::string s = coeffs[i].to_string();
        bool atomic = s.find_first_of("+-", 1) == std::string::npos;
        std::string term;
        if (e == 0)
            term = atomic ? s : "(" + s + ")";
        else {
            std::string mono = e == 1 ? "T" : "T^" + std::to_string(e);
            if (s == "1")
                term = mono;
            else if (s == "-1")
                term = "-" + mono;
            else
                term = (atomic ? s : "(" + s + ")") + "*" + mono;
        }
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    std::string big_o = "O(T^" + std::to_string(end()) + ")";
    return out.empty() ? big_o : out + " + " + big_o;
}

TruncatedSeries series_expand(const OreFraction& x, std::size_t precision) {
    if (precision == 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
    const auto& F = x.field();
    const SkewPolynomial& A = x.numerator();
    const SkewPolynomial& B = x.denominator();
    TruncatedSeries s{F, 0, {}};
    if (A.is_zero()) {
        s.coeffs.assign(precision, F->zero());
        return s;
    }
    // B = T^m B2 with B2(0) != 0; x = (A B2^-1) T^-m and A B2^-1 = sum s_j T^j.
    const std::size_t m = B.valuation();
    std::vector<Element> b2;
    for (std::size_t i = m; i < B.size(); ++i) b2.push_back(B.coefficient(i).sigma_power(-static_cast<long long>(m)));
    const std::size_t vA = A.valuation();
    const std::size_t top = vA + precision;
    std::vector<Element> S(top, F->zero());
    for (std::size_t j = vA; j < top; ++j) {
        Element acc = A.coefficient(j);
        for (std::size_t i = vA; i < j; ++i) {
            std::size_t d = j - i;
            if (d < b2.size()) acc -= S[i] * b2[d].sigma_power(static_cast<long long>(i));
        }
        S[j] = acc / b2[0].sigma_power(static_cast<long long>(j));
    }
    s.valuation = static_cast<long long>(vA) - static_cast<long long>(m);
    s.coeffs.assign(S.begin() + static_cast<std::ptrdiff_t>(vA), S.end());
    return s;
}

TruncatedSeries series_add(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same_field(s.field, t.field);
    TruncatedSeries r{s.field, std::min(s.valuation, t.valuation), {}};
    const long long stop = std::min(s.end(), t.end());
    for (long long e = r.valuation; e < stop; ++e) r.coeffs.push_back(s.coefficient(e) + t.coefficient(e));
    r.normalize();
    return r;
}

/* partial fractions */

namespace {

// Solves m b = rhs for square invertible m.
std::vector<Element> solve(Matrix m, std::vector<Element> rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw Error(ErrorCode::InternalError, "singular system in term merging");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        Element inv = m[col][col].inverse();
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Element f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    for (std::size_t r = 0; r < n; ++r) rhs[r] = rhs[r] / m[r][r];
    return rhs;
}

// Keeps a P-basis of the c's and re-solves the b's from the first series coefficients.
std::vector<SimpleTerm> merge_dependent(const FieldPtr& L, std::vector<SimpleTerm> terms) {
    std::vector<Element> cs;
    for (const auto& t : terms) cs.push_back(t.c);
    auto alg = minimal_polynomial(L, cs);
    if (alg.basis.size() == cs.size()) return terms;
    const std::size_t k = alg.basis.size();
    std::vector<Element> rhs(k, L->zero());
    for (const auto& t : terms) {
        auto nv = norms(k, t.c);
        for (std::size_t j = 0; j < k; ++j) rhs[j] += t.b * nv[j];
    }
    std::vector<Element> basis_c;
    for (auto i : alg.basis) basis_c.push_back(cs[i]);
    auto b = solve(sigma_vandermonde(basis_c, k), rhs);
    std::vector<SimpleTerm> out;
    for (std::size_t i = 0; i < k; ++i)
        if (!b[i].is_zero()) out.push_back({b[i], basis_c[i]});
    return out;
}

struct Splitting {
    FieldEmbedding emb;
    unsigned degree = 1;
    std::vector<Element> roots;  // P-independent, as many as deg B1
};

std::vector<Element> order_roots(std::vector<Element> roots, const PfdOptions& opt) {
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (opt.order == PfdOptions::RootOrder::Descending) std::reverse(roots.begin(), roots.end());
    if (opt.order == PfdOptions::RootOrder::Shuffled) {
        std::mt19937_64 rng(opt.seed);
        std::shuffle(roots.begin(), roots.end(), rng);
    }
    return roots;
}

std::vector<Element> pick_basis(const FieldPtr& L, const std::vector<Element>& roots) {
    auto alg = minimal_polynomial(L, roots);
    std::vector<Element> out;
    for (auto i : alg.basis) out.push_back(roots[i]);
    return out;
}

constexpr std::uint64_t kMaxSearchField = std::uint64_t{1} << 22;

Splitting split(const SkewPolynomial& B1, const PfdOptions& opt) {
    const auto& K = B1.field();
    const std::size_t n = B1.degree().value();
    if (!opt.candidate_roots.empty()) {
        const FieldPtr& L = opt.candidate_roots.front().field();
        Splitting s{make_embedding(K, L), 1, {}};
        if (K->is_finite() && L->is_finite())
            s.degree = as_finite(L).degree() / as_finite(K).degree();
        SkewPolynomial BL = s.emb(B1);
        for (const auto& r : opt.candidate_roots) {
            require_same_field(L, r.field());
            if (!eval_right(BL, r).is_zero())
                throw Error(ErrorCode::InvalidArgument, "candidate " + r.to_string() + " is not a root of the denominator");
        }
        s.roots = pick_basis(L, order_roots(opt.candidate_roots, opt));
        if (s.roots.size() < n)
            throw Error(ErrorCode::UnsplittableDenominator,
                        "supplied roots span rank " + std::to_string(s.roots.size()) + " < " + std::to_string(n));
        return s;
    }
    if (!K->is_finite())
        throw Error(ErrorCode::UnsplittableDenominator,
                    "denominator factor " + B1.to_string() + " over an infinite field needs supplied roots");
    for (unsigned j = 1; j <= opt.tower_bound; ++j) {
        // Past this size the exhaustive search is not worth attempting.
        if (std::pow(static_cast<double>(as_finite(K).order()), j) > static_cast<double>(kMaxSearchField))
            break;
        auto ext = extend_finite_field(K, j);
        SkewPolynomial BL = ext.embedding(B1);
        auto found = enumerate_roots(BL).roots;
        auto basis = pick_basis(ext.field, order_roots(found, opt));
        if (basis.size() >= n) return {ext.embedding, j, basis};
    }
    throw Error(ErrorCode::UnsplittableDenominator,
                "denominator factor " + B1.to_string() + " does not split within extension degree " +
                    std::to_string(opt.tower_bound));
}

}  // namespace

PfdResult pfd(const OreFraction& input, const PfdOptions& opt) {
    const OreFraction x = input.reduced();
    const auto& K = x.field();
    const SkewPolynomial& A = x.numerator();
    const SkewPolynomial& B = x.denominator();  // monic
    const std::size_t m = B.valuation();

    // B = B1 T^m = T^m B2.
    std::vector<Element> b1, b2;
    for (std::size_t i = m; i < B.size(); ++i) {
        b1.push_back(B.coefficient(i));
        b2.push_back(B.coefficient(i).sigma_power(-static_cast<long long>(m)));
    }
    SkewPolynomial B1(K, b1), B2(K, b2);

    // U T^m + V B2 = 1 gives A B^-1 = (A U) B1^-1 + (A V) T^-m.
    SkewPolynomial AU = A, AV(K);
    if (m > 0) {
        auto bz = gcrd(SkewPolynomial::monomial(K->one(), m), B2);
        AU = A * bz.u;
        AV = A * bz.v;
    }
    DivMod qr = right_divmod(AU, B1);
    SkewPolynomial P0 = qr.quotient;
    std::vector<Element> high, pole(m, K->zero());
    for (std::size_t j = 0; j < AV.size(); ++j) {
        if (j < m)
            pole[m - j - 1] = AV.coefficient(j);
        else
            high.push_back(AV.coefficient(j));
    }
    P0 += SkewPolynomial(K, high);

    PfdResult res{K, 1, P0, pole, {}};
    const SkewPolynomial& R = qr.remainder;
    if (R.is_zero()) return res;

    // R B1^-1 = sum beta_i (T - t_i)^-1 where B1 = (T - t_i) P_i and P_i kills all roots but r_i.
    Splitting sp = split(B1, opt);
    const FieldPtr& L = sp.emb.target();
    SkewPolynomial RL = sp.emb(R), BL = sp.emb(B1);
    const std::size_t n = sp.roots.size();
    std::vector<SimpleTerm> terms;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Element> rest;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) rest.push_back(sp.roots[j]);
        SkewPolynomial Pi = minimal_polynomial(L, rest).minimal_poly;
        DivMod lin = right_divmod(BL, Pi);
        if (!lin.remainder.is_zero() || !(lin.quotient.degree() == 1))
            throw Error(ErrorCode::InternalError, "minimal polynomial of a root subset does not divide B1");
        Element t = -lin.quotient.coefficient(0);
        Element beta = eval_right(RL, sp.roots[i]) / eval_right(Pi, sp.roots[i]);
        if (beta.is_zero()) continue;
        // (T - t)^-1 = (-t)^-1 (1 - sigma(t)^-1 T)^-1.
        terms.push_back({beta / (-t), t.sigma().inverse()});
    }
    terms = merge_dependent(L, std::move(terms));

    res.field = L;
    res.extension_degree = sp.degree;
    res.polynomial_part = sp.emb(P0);
    for (auto& a : res.pole_part) a = sp.emb(a);
    res.terms = std::move(terms);

    std::vector<Element> cs;
    for (const auto& t : res.terms) cs.push_back(t.c);
    if (!is_p_independent(cs)) throw Error(ErrorCode::InternalError, "simple-term generators are P-dependent");
    if (!(recombine(res) == OreFraction(sp.emb(A), sp.emb(B))))
        throw Error(ErrorCode::InternalError, "partial fractions do not recombine to the input");
    return res;
}

OreFraction recombine(const PfdResult& r) {
    const auto& L = r.field;
    OreFraction acc = OreFraction::from_polynomial(r.polynomial_part);
    for (std::size_t i = 0; i < r.pole_part.size(); ++i) {
        if (r.pole_part[i].is_zero()) continue;
        acc = frac_add(acc, OreFraction(SkewPolynomial::constant(r.pole_part[i]),
                                        SkewPolynomial::monomial(L->one(), i + 1)));
    }
    for (const auto& t : r.terms) {
        SkewPolynomial den(L, {L->one(), -t.c});
        acc = frac_add(acc, OreFraction(SkewPolynomial::constant(t.b), den));
    }
    return acc.reduced();
}

}  // namespace skew
