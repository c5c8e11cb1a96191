/*
   Copyright 2026 The tmot Authors

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

#include "tmot/text.hpp"

#include <cctype>

#include "tmot/error.hpp"

namespace tmot {

namespace {

class Parser {
   public:
    Parser(const std::string& text, int q) : q_(q), text_(text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }

    KtPoly parse() {
        KtPoly r = expr();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

   private:
    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorCode::ConfigParse, "cannot parse '" + text_ + "': " + what);
    }
    bool eat(char ch) {
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }
    KtPoly constant(long long c) const {
        return KtPoly::constant(q_, RationalFn(Poly::constant(q_, Var::Theta, c)));
    }

    KtPoly expr() {
        KtPoly acc = term();
        while (pos_ < s_.size()) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    KtPoly term() {
        KtPoly acc = unary();
        while (pos_ < s_.size()) {
            if (eat('*')) {
                acc *= unary();
            } else if (eat('/')) {
                KtPoly d = unary();
                if (d.is_zero()) error("division by zero");
                if (d.degree() > 0) error("division by an expression in t");
                acc = acc.scaled(d.coeff(0).inverse());
            } else {
                break;
            }
        }
        return acc;
    }

    KtPoly power() {
        KtPoly base = primary();
        if (!eat('^')) return base;
        bool neg = eat('-');
        long long e = integer();
        if (neg) {
            if (base.degree() > 0) error("negative power of an expression in t");
            if (base.is_zero()) error("negative power of zero");
            base = KtPoly::constant(q_, base.coeff(0).inverse());
        }
        KtPoly r = constant(1);
        for (long long i = 0; i < e; ++i) r *= base;
        return r;
    }

    KtPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    KtPoly primary() {
        if (pos_ >= s_.size()) error("unexpected end");
        char ch = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) return constant(integer());
        if (ch == 't') {
            ++pos_;
            return KtPoly::t_power(q_, 1);
        }
        if (ch == 'x') {
            ++pos_;
            return KtPoly::constant(q_, RationalFn(Poly::monomial(q_, Var::Theta, 1)));
        }
        if (eat('(')) {
            KtPoly r = expr();
            if (!eat(')')) error("missing ')'");
            return r;
        }
        error("unexpected '" + std::string(1, ch) + "'");
    }

    long long integer() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) error("expected an integer");
        if (pos_ - start > 9) error("integer too large");
        return std::stoll(s_.substr(start, pos_ - start));
    }

    int q_;
    std::string text_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

KtPoly parse_kt(const std::string& text, int q) {
    require_prime_field(q);
    return Parser(text, q).parse();
}

BiPoly parse_bipoly(const std::string& text, int q) {
    KtPoly k = parse_kt(text, q);
    for (const RationalFn& c : k.coeffs())
        if (!c.is_polynomial()) fail(ErrorCode::ConfigParse, "'" + text + "' is not a polynomial in t and x");
    return to_bipoly(k);
}

RationalFn parse_rational(const std::string& text, int q) {
    KtPoly k = parse_kt(text, q);
    if (k.degree() > 0) fail(ErrorCode::ConfigParse, "'" + text + "' involves t");
    return k.is_zero() ? RationalFn(Poly(q, Var::Theta)) : k.coeff(0);
}

Poly parse_poly(const std::string& text, int q, Var v) {
    // The parser knows t and x; read the other letter as x, then relabel.
    std::string s = text;
    for (char& ch : s) {
        if (v == Var::T && ch == 't') ch = 'x';
        else if (v == Var::T && ch == 'x') fail(ErrorCode::ConfigParse, "'" + text + "' is not a polynomial in t");
    }
    KtPoly k = parse_kt(s, q);
    if (k.degree() > 0) fail(ErrorCode::ConfigParse, "'" + text + "' is not a polynomial in " + var_letter(v));
    RationalFn r = k.is_zero() ? RationalFn(Poly(q, Var::Theta)) : k.coeff(0);
    if (!r.is_polynomial()) fail(ErrorCode::ConfigParse, "'" + text + "' is not a polynomial");
    return r.num().with_var(v);
}

}  // namespace tmot
