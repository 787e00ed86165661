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

#ifndef SKEW_ROOTS_HPP
#define SKEW_ROOTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skew/skew_poly.hpp"

namespace skew {

/* ordinary commutative polynomials over a field */

class OrdinaryPolynomial {
   public:
    explicit OrdinaryPolynomial(FieldPtr field);
    OrdinaryPolynomial(FieldPtr field, std::vector<Element> coefficients);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Element>& coefficients() const noexcept { return c_; }
    Degree degree() const noexcept { return c_.empty() ? Degree() : Degree(c_.size() - 1); }
    bool is_zero() const noexcept { return c_.empty(); }

    Element operator()(const Element& x) const;
    OrdinaryPolynomial derivative() const;
    OrdinaryPolynomial monic() const;
    std::string to_string(std::string_view var = "x") const;

    friend bool operator==(const OrdinaryPolynomial&, const OrdinaryPolynomial&);

   private:
    FieldPtr field_;
    std::vector<Element> c_;
};

OrdinaryPolynomial remainder(const OrdinaryPolynomial& a, const OrdinaryPolynomial& b);
OrdinaryPolynomial gcd(const OrdinaryPolynomial& a, const OrdinaryPolynomial& b);  // monic

/* root enumeration */

struct RootReport {
    SkewPolynomial polynomial;
    std::vector<Element> roots;  // sorted
    std::size_t classes_hit = 0;
    // (smallest element of the class, number of roots in it), ordered by representative.
    std::vector<std::pair<Element, std::size_t>> per_class_counts;
};

// Evaluates P at every element; jobs > 1 splits the element range over threads.
RootReport enumerate_roots(const SkewPolynomial& P, unsigned jobs = 1);

// E(P, 1) = {x : sum a_i sigma^i(x) = 0} as a vector space over the fixed field F.
struct SemilinearKernel {
    std::vector<Element> basis;  // F-basis
    std::size_t dimension = 0;
    std::uint64_t fixed_field_size = 0;
    std::vector<Element> class_one_roots;  // sigma(x)/x for nonzero kernel x, sorted
    std::uint64_t predicted_count = 0;     // (|F|^d - 1)/(|F| - 1)
};

SemilinearKernel class_roots_via_kernel(const SkewPolynomial& P);

// Elements fixed by sigma, found by enumeration.
std::vector<Element> fixed_field_elements(const FieldPtr& field);

// For (F_{p^k}, Frob^n): f(x) = sum a_i x^((p^(in) - 1)/(p^n - 1)).
OrdinaryPolynomial frobenius_reduce(const SkewPolynomial& P);
std::uint64_t frobenius_exponent(std::uint64_t p, unsigned n, std::size_t i);

struct ClosureCount {
    std::uint64_t count = 0;    // deg f, the number of distinct roots over the closure
    std::uint64_t formula = 0;  // (p^(nm) - 1)/(p^n - 1)
};

ClosureCount closure_root_count(const SkewPolynomial& P);

struct Degree2Report {
    std::uint64_t target = 0;
    std::uint64_t polynomials = 0;
    std::uint64_t min_count = 0;
    std::uint64_t max_count = 0;
    bool reaches_target = false;
    std::map<std::uint64_t, std::uint64_t> histogram;  // root count -> number of polynomials
    bool kernel_consistent = true;  // class C(1) counts matched the kernel formula throughout
};

// Sweeps a_0 + a_1 T + a_2 T^2 with a_0, a_2 != 0.
Degree2Report check_degree2_closedness(const FieldPtr& field, std::uint64_t target);

// Minimal polynomial of the whole (finite) field.
SkewPolynomial vanishing_polynomial(const FieldPtr& field);

}  // namespace skew

#endif
