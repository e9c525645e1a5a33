/*
   Copyright 2026 The drinfeld-lab Authors

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

#include "drinfeld/parse.hpp"

#include <cctype>

namespace drinfeld {

namespace {

class Parser {
   public:
    Parser(std::string_view text, const FieldPtr& field, bool allow_x) : text_(text), field_(field), allow_x_(allow_x) {}

    KPolyX parse() {
        skip_space();
        if (pos_ == text_.size()) fail("empty expression");
        KPolyX value = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    KPolyX constant(const RationalFn& r) const { return KPolyX::constant(r); }

    KPolyX expression() {
        KPolyX acc;
        bool negate = accept('-');
        if (!negate) accept('+');
        KPolyX t = term();
        acc = negate ? -t : t;
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    KPolyX term() {
        KPolyX acc = power();
        while (true) {
            if (accept('*')) {
                acc = acc * power();
            } else if (accept('/')) {
                std::size_t at = pos_;
                KPolyX d = power();
                if (d.deg() > 0) throw ParseError("division by an expression involving X", at);
                if (d.is_zero()) throw ParseError("division by zero", at);
                acc = acc.scaled(d.leading().inverse());
            } else {
                return acc;
            }
        }
    }

    KPolyX power() {
        KPolyX base = factor();
        if (!accept('^')) return base;
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a nonnegative integer exponent");
        if (pos_ - start > 9) throw ParseError("exponent too large", start);
        unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
        KPolyX result = constant(RationalFn(APoly::one(field_)));
        KPolyX b = base;
        while (e > 0) {
            if (e & 1) result = result * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return result;
    }

    KPolyX factor() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            KPolyX inner = expression();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string digits(text_.substr(start, pos_ - start));
            if (digits.size() > 9 || std::stoul(digits) >= field_->p())
                throw ParseError("constant " + digits + " outside [0, p)", start);
            return constant(RationalFn(APoly::constant(field_, static_cast<Fq>(std::stoul(digits)))));
        }
        if (c == 'T') {
            ++pos_;
            return constant(RationalFn(APoly::T(field_)));
        }
        if (c == 'X') {
            if (!allow_x_) fail("variable X not allowed here");
            ++pos_;
            return KPolyX::monomial(RationalFn(APoly::one(field_)), 1);
        }
        if (c == 'u') {
            if (field_->is_prime_field()) fail("generator u only exists for non-prime q");
            ++pos_;
            return constant(RationalFn(APoly::constant(field_, field_->p())));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const FieldPtr& field_;
    bool allow_x_;
    std::size_t pos_ = 0;
};

RationalFn x_free(const KPolyX& v, std::string_view text) {
    if (v.deg() > 0) throw ParseError("unexpected variable X", text.find('X'));
    return v.is_zero() ? RationalFn() : v.coeffs()[0];
}

}  // namespace

RationalFn parse_rational_fn(std::string_view text, const FieldPtr& field) {
    RationalFn r = x_free(Parser(text, field, false).parse(), text);
    return r.is_zero() ? RationalFn(field) : r;
}

APoly parse_apoly(std::string_view text, const FieldPtr& field) {
    RationalFn r = parse_rational_fn(text, field);
    if (!r.is_polynomial()) throw ParseError("expected a polynomial in T, got a fraction", 0);
    return r.num().is_zero() ? APoly(field) : r.num();
}

KPolyX parse_kpolyx(std::string_view text, const FieldPtr& field) { return Parser(text, field, true).parse(); }

APolyX parse_apolyx(std::string_view text, const FieldPtr& field) {
    KPolyX v = parse_kpolyx(text, field);
    std::vector<APoly> out;
    for (const RationalFn& c : v.coeffs()) {
        if (!c.is_polynomial()) throw ParseError("coefficients must lie in F_q[T]", 0);
        out.push_back(c.num().is_zero() ? APoly(field) : c.num());
    }
    return APolyX(std::move(out));
}

Fq parse_fq(std::string_view text, const FieldPtr& field) {
    APoly a = parse_apoly(text, field);
    if (a.deg() > 0) throw ParseError("expected an element of F_q", 0);
    return a.coeff(0);
}

}  // namespace drinfeld
