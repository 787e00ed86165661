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

#ifndef SKEW_EXTENSION_HPP
#define SKEW_EXTENSION_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "skew/skew_poly.hpp"
#include "skew/tower.hpp"

namespace skew {

/* K[y_0, ..., y_{n-1}] */

class MultiPoly {
   public:
    using Exponents = std::vector<unsigned>;

    MultiPoly(FieldPtr field, std::size_t vars);
    static MultiPoly constant(const Element& c, std::size_t vars);
    static MultiPoly variable(const FieldPtr& field, std::size_t vars, std::size_t i);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t vars() const noexcept { return vars_; }
    const std::map<Exponents, Element>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exponents& e, const Element& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Element& c) const;
    MultiPoly pow(unsigned e) const;

    std::string to_string() const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

   private:
    FieldPtr field_;
    std::size_t vars_;
    std::map<Exponents, Element> terms_;
};

// d_0 + d_1 y_0 + d_2 y_0 y_1 + ... + d_n y_0...y_{n-1}.
struct VnElement {
    std::vector<Element> d;

    std::size_t n() const noexcept { return d.size() - 1; }
    bool is_zero() const;
    MultiPoly to_multipoly() const;
    std::string to_string() const;
    friend bool operator==(const VnElement& a, const VnElement& b);
};

// numerator / (product of nonzero V_n factors), factors kept normalized and sorted;
// factors dividing the numerator are cancelled.
class MultiRational {
   public:
    explicit MultiRational(MultiPoly numerator);
    MultiRational(MultiPoly numerator, std::vector<VnElement> denominator);

    const MultiPoly& numerator() const noexcept { return num_; }
    const std::vector<VnElement>& denominator() const noexcept { return den_; }
    MultiPoly expanded_denominator() const;
    bool is_zero() const noexcept { return num_.is_zero(); }

    MultiRational operator+(const MultiRational& o) const;
    MultiRational operator-(const MultiRational& o) const;
    MultiRational operator*(const MultiRational& o) const;
    MultiRational divided_by(const VnElement& s) const;

    std::string to_string() const;
    // Cross-multiplication.
    friend bool operator==(const MultiRational& a, const MultiRational& b);

   private:
    // Drops denominator factors that divide the numerator exactly.
    void cancel();

    MultiPoly num_;
    std::vector<VnElement> den_;
};

/* K[P] for P = T^(n+1) - c_n T^n - ... - c_0 */

struct ExtensionOptions {
    std::size_t max_degree = 4;
};

// c_0..c_n of P after the checks on P (monic, P(0) != 0, degree cap).
std::vector<Element> kp_constants(const SkewPolynomial& P, const ExtensionOptions& opt = {});

VnElement l_map(const VnElement& Y, const SkewPolynomial& P);
MultiRational phi_apply(const MultiPoly& q, const SkewPolynomial& P);
MultiRational sigma_P_apply(const MultiRational& x, const SkewPolynomial& P);

struct KPVerification {
    bool root = false;     // P(y_0) = 0 in K(P)
    bool minimal = false;  // N_0(y_0), .., N_n(y_0) are K-independent
    std::vector<std::string> norms;        // N_i(y_0), i = 0..n+1
    std::vector<std::string> sigma_table;  // sigma_P(y_i)
    std::string value;                     // P(y_0)
};

KPVerification verify_root_in_KP(const SkewPolynomial& P, const ExtensionOptions& opt = {});

struct PsiReport {
    std::size_t samples = 0;
    bool additive = true;
    bool multiplicative = true;
    bool intertwines = true;
    bool denominators_nonzero = true;
    bool ok() const { return additive && multiplicative && intertwines && denominators_nonzero; }
};

// psi_a: y_i -> sigma^i(a) from K[P] into the target of emb. Throws NotMinimal unless P
// is the minimal polynomial of a over K.
PsiReport psi_a_check(const SkewPolynomial& P, const Element& a, const FieldEmbedding& emb, std::size_t samples = 50,
                      std::uint64_t seed = 1);

// psi_a applied to x.
Element psi_apply(const MultiRational& x, const Element& a, const FieldEmbedding& emb);

MultiRational random_multirational(const FieldPtr& field, std::size_t n, std::mt19937_64& rng);

}  // namespace skew

#endif
