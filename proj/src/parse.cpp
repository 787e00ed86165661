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

#include "skew/parse.hpp"

#include <cctype>

namespace skew {

namespace {

constexpr std::uint64_t kMaxPolyPower = 100000;

class Parser {
   public:
    Parser(FieldPtr field, std::string_view text, bool allow_T)
        : field_(std::move(field)), s_(text), allow_T_(allow_T) {}

    SkewPolynomial run() {
        skip_ws();
        if (pos_ == s_.size()) fail("empty expression");
        auto v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const { throw Error(ErrorCode::SyntaxError, msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    SkewPolynomial expr() {
        auto v = term();
        while (true) {
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }

    SkewPolynomial term() {
        auto v = unary();
        while (true) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                auto d = unary();
                if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero", at);
                if (d.degree() > Degree(0)) throw Error(ErrorCode::SyntaxError, "division by a non-constant", at);
                v = v.scaled_right(d.coefficient(0).inverse());
            } else {
                return v;
            }
        }
    }

    SkewPolynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    SkewPolynomial power() {
        auto base = primary();
        if (!accept('^')) return base;
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a nonnegative integer exponent");
        Integer e(std::string(s_.substr(start, pos_ - start)));
        return raise(base, e, start);
    }

    SkewPolynomial raise(const SkewPolynomial& base, const Integer& e, std::size_t at) {
        if (base.degree() <= Degree(0)) {
            if (!e.fits_ulong_p()) throw Error(ErrorCode::SyntaxError, "exponent too large", at);
            Element c = base.is_zero() ? field_->zero() : base.coefficient(0);
            if (e == 0) return SkewPolynomial::constant(field_->one());
            return SkewPolynomial::constant(c.pow(e.get_ui()));
        }
        if (e > kMaxPolyPower) throw Error(ErrorCode::SyntaxError, "exponent too large", at);
        std::uint64_t n = e.get_ui();
        SkewPolynomial acc = SkewPolynomial::constant(field_->one()), b = base;
        while (n) {
            if (n & 1) acc = acc * b;
            n >>= 1;
            if (n) b = b * b;
        }
        return acc;
    }

    SkewPolynomial primary() {
        skip_ws();
        if (pos_ == s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto lit = SkewPolynomial::constant(field_->from_integer(Integer(std::string(s_.substr(start, pos_ - start)))));
            if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) return lit * power();
            return lit;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto name = s_.substr(start, pos_ - start);
            if (name == "T") {
                if (!allow_T_) throw Error(ErrorCode::FieldLiteralError, "T is not a field element", start);
                return SkewPolynomial::T(field_);
            }
            if (!field_->generator_symbol().empty() && name == field_->generator_symbol())
                return SkewPolynomial::constant(field_->generator());
            throw Error(ErrorCode::FieldLiteralError,
                        "unknown symbol '" + std::string(name) + "' for field " + field_->name(), start);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    FieldPtr field_;
    std::string_view s_;
    bool allow_T_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(const FieldPtr& field, std::string_view text) {
    auto p = Parser(field, text, false).run();
    return p.is_zero() ? field->zero() : p.coefficient(0);
}

SkewPolynomial parse_polynomial(const FieldPtr& field, std::string_view text) {
    return Parser(field, text, true).run();
}

std::vector<Element> parse_element_list(const FieldPtr& field, std::string_view text) {
    std::vector<Element> out;
    std::size_t depth = 0, start = 0;
    bool blank = true;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) return out;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] == '(') ++depth;
        if (i < text.size() && text[i] == ')' && depth) --depth;
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            try {
                out.push_back(parse_element(field, text.substr(start, i - start)));
            } catch (const Error& e) {
                if (!e.has_position()) throw;
                throw Error(e.code(), std::string(e.what()).substr(0, std::string(e.what()).rfind(" (at position")),
                            start + e.position());
            }
            start = i + 1;
        }
    }
    return out;
}

}  // namespace skew
