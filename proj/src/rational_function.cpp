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

#include <algorithm>

#include "field_impl.hpp"

namespace skew::detail {

/* QPoly */

void trim(QPoly& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    trim(c);
    return c;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    trim(c);
    return c;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

QPoly scale(const QPoly& a, const Rational& s) {
    if (sgn(s) == 0) return {};
    QPoly c(a);
    for (auto& x : c) x *= s;
    return c;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
    rem = a;
    trim(rem);
    quot.clear();
    if (rem.size() < b.size()) return;
    quot.assign(rem.size() - b.size() + 1, Rational(0));
    while (rem.size() >= b.size()) {
        Rational c = rem.back() / b.back();
        std::size_t shift = rem.size() - b.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        rem.pop_back();
        trim(rem);
    }
    trim(quot);
}

namespace {

using ZPoly = std::vector<Integer>;

// Integer multiple with content 1.
ZPoly primitive_part(const QPoly& f) {
    Integer l = 1;
    for (const auto& c : f) l = lcm(l, Integer(c.get_den()));
    ZPoly z;
    for (const auto& c : f) z.push_back(Integer(c.get_num() * (l / c.get_den())));
    Integer g = 0;
    for (const auto& c : z) g = gcd(g, c);
    if (g != 0 && g != 1)
        for (auto& c : z) c /= g;
    return z;
}

void make_primitive(ZPoly& z) {
    Integer g = 0;
    for (const auto& c : z) {
        g = gcd(g, c);
        if (g == 1) return;
    }
    if (g != 0)
        for (auto& c : z) c /= g;
}

void ztrim(ZPoly& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

}  // namespace

// Primitive remainder sequence over Z.
QPoly monic_gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    if (a.empty() && b.empty()) return {};
    ZPoly x = primitive_part(a), y = primitive_part(b);
    ztrim(x);
    ztrim(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        if (y.size() == 1) return {Rational(1)};
        // pseudo-remainder of x by y
        while (x.size() >= y.size()) {
            Integer lx = x.back(), ly = y.back(), g = gcd(lx, ly);
            Integer mx = ly / g, my = lx / g;
            std::size_t shift = x.size() - y.size();
            for (auto& c : x) c *= mx;
            for (std::size_t i = 0; i < y.size(); ++i) x[shift + i] -= my * y[i];
            x.pop_back();
            ztrim(x);
        }
        make_primitive(x);
        std::swap(x, y);
    }
    QPoly out;
    for (const auto& c : x) out.push_back(Rational(c));
    out = scale(out, 1 / Rational(out.back()));
    return out;
}

std::string to_string(const QPoly& f, std::string_view var) {
    if (f.empty()) return "0";
    std::string s;
    for (std::size_t j = f.size(); j-- > 0;) {
        const Rational& c = f[j];
        if (sgn(c) == 0) continue;
        std::string term;
        if (j == 0) {
            term = c.get_str();
        } else {
            std::string mono(var);
            if (j > 1) mono += "^" + std::to_string(j);
            if (c == 1)
                term = mono;
            else if (c == -1)
                term = "-" + mono;
            else
                term = c.get_str() + "*" + mono;
        }
        if (!s.empty() && term[0] != '-') s += '+';
        s += term;
    }
    return s;
}

namespace {

std::size_t term_count(const QPoly& f) {
    return static_cast<std::size_t>(std::count_if(f.begin(), f.end(), [](const Rational& c) { return sgn(c) != 0; }));
}

std::strong_ordering compare_poly(const QPoly& a, const QPoly& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t j = a.size(); j-- > 0;) {
        int c = cmp(a[j], b[j]);
        if (c) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

// Certifies gcd(a, b) = 1 when the images mod p keep their degrees and are coprime there:
// a common factor over Q would survive reduction with its degree intact.
bool coprime_mod_p(const QPoly& a, const QPoly& b) {
    using u128 = unsigned __int128;
    constexpr std::uint64_t p = 2305843009213693951ULL;  // 2^61 - 1
    auto mulm = [](std::uint64_t x, std::uint64_t y) { return static_cast<std::uint64_t>(u128(x) * y % p); };
    auto powm = [&](std::uint64_t x, std::uint64_t e) {
        std::uint64_t r = 1;
        for (; e; e >>= 1, x = mulm(x, x))
            if (e & 1) r = mulm(r, x);
        return r;
    };
    auto reduce = [&](const QPoly& f, std::vector<std::uint64_t>& out) {
        Integer P(std::to_string(p));
        out.clear();
        for (const auto& c : f) {
            Integer n = c.get_num() % P, d = c.get_den() % P;
            if (n < 0) n += P;
            if (d == 0) return false;
            out.push_back(mulm(n.get_ui(), powm(Integer(d).get_ui(), p - 2)));
        }
        return !out.empty() && out.back() != 0;
    };
    static_assert(sizeof(unsigned long) == 8);
    std::vector<std::uint64_t> x, y;
    if (!reduce(a, x) || !reduce(b, y)) return false;
    while (!y.empty()) {
        if (y.size() == 1) return true;
        std::uint64_t inv = powm(y.back(), p - 2);
        while (x.size() >= y.size()) {
            std::uint64_t c = mulm(x.back(), inv);
            std::size_t shift = x.size() - y.size();
            for (std::size_t i = 0; i < y.size(); ++i) x[shift + i] = (x[shift + i] + p - mulm(c, y[i])) % p;
            while (!x.empty() && x.back() == 0) x.pop_back();
        }
        std::swap(x, y);
    }
    return x.size() == 1;
}

RatFuncValue normalize(QPoly num, QPoly den) {
    trim(num);
    trim(den);
    if (num.empty()) return RatFuncValue{{}, {Rational(1)}};
    QPoly g{Rational(1)};
    if (den.size() > 1 && num.size() > 1 && !coprime_mod_p(num, den)) g = monic_gcd(num, den);
    QPoly q, r;
    if (g.size() > 1) {
        divmod(num, g, q, r);
        num = q;
        divmod(den, g, q, r);
        den = q;
    }
    Rational li = 1 / Rational(den.back());
    return RatFuncValue{scale(num, li), scale(den, li)};
}

QPoly x_power(std::size_t e) {
    QPoly f(e + 1);
    f[e] = 1;
    return f;
}

// Q(x) with sigma(f)(x) = f(1/x).
class RationalFunctions final : public SigmaField {
   public:
    RationalFunctions() : SigmaField(FieldDescriptor::parse("qx-inv")) {}

    std::string_view generator_symbol() const noexcept override { return "x"; }
    bool is_finite() const noexcept override { return false; }
    std::uint64_t characteristic() const noexcept override { return 0; }
    unsigned sigma_order() const noexcept override { return 2; }

   protected:
    static const RatFuncValue& v(const Payload& a) { return std::get<RatFuncValue>(a); }

    Payload p_from_integer(const Integer& n) const override { return normalize({Rational(n)}, {Rational(1)}); }
    Payload p_generator() const override { return RatFuncValue{{Rational(0), Rational(1)}, {Rational(1)}}; }
    Payload p_random(std::mt19937_64& rng) const override {
        std::uniform_int_distribution<int> c(-3, 3);
        while (true) {
            QPoly num{Rational(c(rng)), Rational(c(rng))};
            QPoly den{Rational(c(rng)), Rational(c(rng))};
            trim(den);
            if (den.empty()) continue;
            return normalize(std::move(num), std::move(den));
        }
    }
    Payload p_add(const Payload& a, const Payload& b) const override {
        const auto &x = v(a), &y = v(b);
        if (x.den == y.den) return normalize(add(x.num, y.num), x.den);
        return normalize(add(mul(x.num, y.den), mul(y.num, x.den)), mul(x.den, y.den));
    }
    Payload p_sub(const Payload& a, const Payload& b) const override {
        const auto &x = v(a), &y = v(b);
        if (x.den == y.den) return normalize(sub(x.num, y.num), x.den);
        return normalize(sub(mul(x.num, y.den), mul(y.num, x.den)), mul(x.den, y.den));
    }
    Payload p_neg(const Payload& a) const override { return RatFuncValue{scale(v(a).num, Rational(-1)), v(a).den}; }
    Payload p_mul(const Payload& a, const Payload& b) const override {
        const auto &x = v(a), &y = v(b);
        return normalize(mul(x.num, y.num), mul(x.den, y.den));
    }
    Payload p_inv(const Payload& a) const override { return normalize(v(a).den, v(a).num); }
    Payload p_sigma(const Payload& a) const override {
        const auto& x = v(a);
        if (x.num.empty()) return a;
        QPoly n(x.num.rbegin(), x.num.rend()), d(x.den.rbegin(), x.den.rend());
        trim(n);
        trim(d);
        std::size_t dn = x.num.size() - 1, dd = x.den.size() - 1;
        if (dd >= dn)
            n = mul(n, x_power(dd - dn));
        else
            d = mul(d, x_power(dn - dd));
        return normalize(std::move(n), std::move(d));
    }
    Payload p_sigma_inverse(const Payload& a) const override { return p_sigma(a); }
    bool p_is_zero(const Payload& a) const override { return v(a).num.empty(); }
    bool p_equal(const Payload& a, const Payload& b) const override {
        return v(a).num == v(b).num && v(a).den == v(b).den;
    }
    std::strong_ordering p_compare(const Payload& a, const Payload& b) const override {
        auto c = compare_poly(v(a).num, v(b).num);
        return c != 0 ? c : compare_poly(v(a).den, v(b).den);
    }
    // (x+1)/x, 1/x, (x+1)/(x^2+1)
    std::string p_to_string(const Payload& a) const override {
        const auto& x = v(a);
        std::string n = to_string(x.num, "x");
        if (x.den.size() == 1) return n;
        std::string d = to_string(x.den, "x");
        if (term_count(x.num) > 1 || n.find('/') != std::string::npos) n = "(" + n + ")";
        if (term_count(x.den) > 1) d = "(" + d + ")";
        return n + "/" + d;
    }
};

}  // namespace

FieldPtr make_rational_functions() { return std::make_shared<RationalFunctions>(); }

}  // namespace skew::detail
