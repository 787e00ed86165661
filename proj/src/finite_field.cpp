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

#include "skew/finite_field.hpp"

#include <algorithm>
#include <numeric>

namespace skew {

namespace finite {

namespace {

using u128 = unsigned __int128;

void trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = static_cast<std::uint64_t>(u128(r) * b % m);
        b = static_cast<std::uint64_t>(u128(b) * b % m);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

ModPoly rem(ModPoly a, const ModPoly& b, std::uint64_t p) {
    trim(a);
    const std::uint64_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint64_t c = a.back() * lead_inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + (p - c) * b[i] % p) % p;
        trim(a);
    }
    return a;
}

ModPoly mul_mod(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return rem(std::move(c), f, p);
}

ModPoly pow_poly(ModPoly base, std::uint64_t e, const ModPoly& f, std::uint64_t p) {
    ModPoly r{1};
    base = rem(std::move(base), f, p);
    while (e) {
        if (e & 1) r = mul_mod(r, base, f, p);
        e >>= 1;
        if (e) base = mul_mod(base, base, f, p);
    }
    return r;
}

ModPoly gcd(ModPoly a, ModPoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

ModPoly make_monic(std::uint64_t p, ModPoly f) {
    trim(f);
    if (f.empty()) return f;
    auto li = inv_mod(f.back(), p);
    for (auto& c : f) c = c * li % p;
    return f;
}

// Ben-Or: f of degree k is irreducible iff gcd(x^(p^i) - x, f) = 1 for i <= k/2.
bool is_irreducible(std::uint64_t p, const ModPoly& f) {
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    ModPoly h{0, 1};
    for (std::size_t i = 1; i <= k / 2; ++i) {
        h = pow_poly(h, p, f, p);
        ModPoly t = h;
        if (t.size() < 2) t.resize(2, 0);
        t[1] = (t[1] + p - 1) % p;
        trim(t);
        if (gcd(f, t, p).size() > 1) return false;
    }
    return true;
}

ModPoly smallest_irreducible(std::uint64_t p, unsigned k) {
    ModPoly f(k + 1, 0);
    f[k] = 1;
    while (true) {
        if (f[0] != 0 || k == 1)
            if (is_irreducible(p, f)) return f;
        std::size_t j = 0;
        while (j < k && ++f[j] == p) f[j++] = 0;
        if (j == k) throw Error(ErrorCode::InternalError, "no irreducible polynomial found");
    }
}

}  // namespace finite

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((unsigned __int128)a * b % m);
}

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

}  // namespace

FiniteSigmaField::FiniteSigmaField(FieldDescriptor d) : SigmaField(std::move(d)) {
    const auto& desc = descriptor();
    p_ = desc.p;
    k_ = desc.k;
    n_ = desc.kind == FieldDescriptor::Kind::PrimeField ? 1 : desc.frob;
    modulus_ = desc.kind == FieldDescriptor::Kind::PrimeField ? finite::ModPoly{0, 1} : desc.modulus;
    pow_p_.assign(k_ + 1, 1);
    for (unsigned j = 1; j <= k_; ++j) pow_p_[j] = pow_p_[j - 1] * p_;
    q_ = pow_p_[k_];
    sigma_order_ = k_ / std::gcd(n_ % k_, k_);
    if (q_ <= kTableLimit) build_tables();
}

std::uint64_t FiniteSigmaField::fixed_field_size() const noexcept { return pow_p_[std::gcd(n_ % k_, k_)]; }

FiniteSigmaField::Digits FiniteSigmaField::digits(std::uint64_t x) const {
    Digits d(k_);
    for (unsigned j = 0; j < k_; ++j) {
        d[j] = x % p_;
        x /= p_;
    }
    return d;
}

std::uint64_t FiniteSigmaField::encode(const Digits& d) const {
    std::uint64_t x = 0;
    for (unsigned j = k_; j-- > 0;) x = x * p_ + d[j];
    return x;
}

std::uint64_t FiniteSigmaField::add_raw(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) return (a + b) % p_;
    std::uint64_t out = 0;
    for (unsigned j = 0; j < k_; ++j) {
        out += ((a % p_ + b % p_) % p_) * pow_p_[j];
        a /= p_;
        b /= p_;
    }
    return out;
}

std::uint64_t FiniteSigmaField::neg_raw(std::uint64_t a) const {
    if (p_ == 2) return a;
    std::uint64_t out = 0;
    for (unsigned j = 0; j < k_; ++j) {
        out += ((p_ - a % p_) % p_) * pow_p_[j];
        a /= p_;
    }
    return out;
}

std::uint64_t FiniteSigmaField::mul_slow(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1) return mulmod64(a, b, p_);
    auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> c(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < k_; ++j) c[i + j] = (c[i + j] + mulmod64(da[i], db[j], p_)) % p_;
    }
    for (std::size_t top = c.size(); top-- > k_;) {
        auto t = c[top];
        if (!t) continue;
        c[top] = 0;
        for (unsigned j = 0; j < k_; ++j)
            c[top - k_ + j] = (c[top - k_ + j] + (p_ - mulmod64(t, modulus_[j], p_))) % p_;
    }
    c.resize(k_);
    return encode(c);
}

std::uint64_t FiniteSigmaField::pow_slow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul_slow(r, a);
        e >>= 1;
        if (e) a = mul_slow(a, a);
    }
    return r;
}

void FiniteSigmaField::build_tables() {
    const std::uint64_t m = q_ - 1;
    auto factors = prime_factors(m);
    std::uint64_t g = 0;
    for (std::uint64_t c = 1; c < q_ && !g; ++c) {
        bool primitive = true;
        for (auto l : factors)
            if (pow_slow(c, m / l) == 1) {
                primitive = false;
                break;
            }
        if (primitive) g = c;
    }
    exp_.resize(m);
    log_.assign(q_, 0);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        exp_[i] = static_cast<std::uint32_t>(x);
        log_[x] = static_cast<std::uint32_t>(i);
        x = mul_slow(x, g);
    }
    tables_ = true;
}

std::uint64_t FiniteSigmaField::mul_raw(std::uint64_t a, std::uint64_t b) const {
    if (!tables_) return mul_slow(a, b);
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = std::uint64_t{log_[a]} + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
}

std::uint64_t FiniteSigmaField::frob_raw(std::uint64_t a, unsigned j) const {
    j %= k_;
    if (j == 0 || a == 0) return a;
    if (tables_) {
        const std::uint64_t m = q_ - 1;
        return exp_[mulmod64(log_[a], pow_p_[j] % m, m)];
    }
    for (unsigned t = 0; t < j; ++t) a = pow_slow(a, p_);
    return a;
}

std::uint64_t FiniteSigmaField::index_of(const Element& a) const {
    if (a.field().get() != this) require_same_field(a.field(), shared_from_this());
    return std::get<std::uint64_t>(a.payload());
}

std::vector<std::uint64_t> FiniteSigmaField::coordinates(const Element& a) const { return digits(index_of(a)); }

Element FiniteSigmaField::from_coordinates(const std::vector<std::uint64_t>& c) const {
    if (c.size() != k_) throw Error(ErrorCode::InvalidArgument, "coordinate vector has wrong length");
    Digits d(k_);
    for (unsigned j = 0; j < k_; ++j) d[j] = c[j] % p_;
    return wrap(encode(d));
}

Element FiniteSigmaField::frobenius(const Element& a, unsigned j) const { return wrap(frob_raw(index_of(a), j)); }

std::string_view FiniteSigmaField::generator_symbol() const noexcept { return k_ > 1 ? "u" : ""; }

Payload FiniteSigmaField::p_from_integer(const Integer& n) const {
    Integer r = n % Integer(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    return static_cast<std::uint64_t>(r.get_ui());
}

Payload FiniteSigmaField::p_generator() const {
    if (k_ == 1) throw Error(ErrorCode::Unsupported, "prime fields have no generator symbol");
    return p_;
}

Payload FiniteSigmaField::p_random(std::mt19937_64& rng) const {
    return std::uniform_int_distribution<std::uint64_t>(0, q_ - 1)(rng);
}

Payload FiniteSigmaField::p_add(const Payload& a, const Payload& b) const {
    return add_raw(std::get<std::uint64_t>(a), std::get<std::uint64_t>(b));
}

Payload FiniteSigmaField::p_sub(const Payload& a, const Payload& b) const {
    return add_raw(std::get<std::uint64_t>(a), neg_raw(std::get<std::uint64_t>(b)));
}

Payload FiniteSigmaField::p_neg(const Payload& a) const { return neg_raw(std::get<std::uint64_t>(a)); }

Payload FiniteSigmaField::p_mul(const Payload& a, const Payload& b) const {
    return mul_raw(std::get<std::uint64_t>(a), std::get<std::uint64_t>(b));
}

Payload FiniteSigmaField::p_inv(const Payload& a) const {
    auto x = std::get<std::uint64_t>(a);
    if (tables_) return std::uint64_t{exp_[(q_ - 1 - log_[x]) % (q_ - 1)]};
    return pow_slow(x, q_ - 2);
}

Payload FiniteSigmaField::p_sigma(const Payload& a) const { return frob_raw(std::get<std::uint64_t>(a), n_); }

// sigma^-1 = sigma^(r-1) where r is the order of sigma.
Payload FiniteSigmaField::p_sigma_inverse(const Payload& a) const {
    return frob_raw(std::get<std::uint64_t>(a), static_cast<unsigned>((std::uint64_t{n_} * (sigma_order_ - 1)) % k_));
}

bool FiniteSigmaField::p_is_zero(const Payload& a) const { return std::get<std::uint64_t>(a) == 0; }

bool FiniteSigmaField::p_equal(const Payload& a, const Payload& b) const {
    return std::get<std::uint64_t>(a) == std::get<std::uint64_t>(b);
}

std::strong_ordering FiniteSigmaField::p_compare(const Payload& a, const Payload& b) const {
    return std::get<std::uint64_t>(a) <=> std::get<std::uint64_t>(b);
}

std::string FiniteSigmaField::p_to_string(const Payload& a) const {
    auto x = std::get<std::uint64_t>(a);
    if (k_ == 1) return std::to_string(x);
    if (x == 0) return "0";
    auto d = digits(x);
    std::string s;
    for (unsigned j = k_; j-- > 0;) {
        if (!d[j]) continue;
        if (!s.empty()) s += '+';
        if (j == 0) {
            s += std::to_string(d[j]);
            continue;
        }
        if (d[j] != 1) s += std::to_string(d[j]) + "*";
        s += "u";
        if (j > 1) s += "^" + std::to_string(j);
    }
    return s;
}

Payload FiniteSigmaField::p_element_at(std::uint64_t index) const {
    if (index >= q_) throw Error(ErrorCode::InvalidArgument, "element index out of range");
    return index;
}

const FiniteSigmaField& as_finite(const FieldPtr& field) {
    auto f = dynamic_cast<const FiniteSigmaField*>(field.get());
    if (!f) throw Error(ErrorCode::InfiniteField, "field " + (field ? field->name() : "none") + " is not finite");
    return *f;
}

}  // namespace skew
