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

#include "tmot/rational.hpp"

#include "tmot/error.hpp"

namespace tmot {

RationalFn::RationalFn(const Poly& num) : num_(num), den_(Poly::constant(num.q() == 0 ? 2 : num.q(), num.var(), 1)) {}

RationalFn::RationalFn(const Poly& num, const Poly& den) {
    if (den.is_zero()) fail(ErrorCode::NotInvertible, "zero denominator");
    if (num.is_zero()) {
        num_ = Poly(den.q(), den.var());
        den_ = Poly::constant(den.q(), den.var(), 1);
        return;
    }
    Poly g = gcd(num, den);
    Poly n = g.is_one() ? num : num.exact_div(g);
    Poly d = g.is_one() ? den : den.exact_div(g);
    Coeff li = inverse_mod_prime(d.lead(), d.q());
    num_ = li == 1 ? std::move(n) : n.scaled(li);
    den_ = li == 1 ? std::move(d) : d.scaled(li);
}

int RationalFn::valuation() const {
    if (is_zero()) fail(ErrorCode::ZeroLeadingTerm, "valuation of zero");
    return den_.degree() - num_.degree();
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_one()) return RationalFn(a.num_ + b.num_, a.den_, RationalFn::Trusted{});
        return RationalFn(a.num_ + b.num_, a.den_);
    }
    Poly g = gcd(a.den_, b.den_);
    if (g.is_one()) return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RationalFn::Trusted{});
    Poly ad = a.den_.exact_div(g);
    Poly bd = b.den_.exact_div(g);
    return RationalFn(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    if (a.den_.is_one() && b.den_.is_one()) return RationalFn(a.num_ * b.num_, a.den_, RationalFn::Trusted{});
    // Cross-cancel so the products stay reduced.
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    Poly an = a.num_.exact_div(g1), bd = b.den_.exact_div(g1);
    Poly bn = b.num_.exact_div(g2), ad = a.den_.exact_div(g2);
    Poly n = an * bn, d = ad * bd;
    Coeff li = inverse_mod_prime(d.lead(), d.q());
    if (li != 1) {
        n = n.scaled(li);
        d = d.scaled(li);
    }
    return RationalFn(std::move(n), std::move(d), RationalFn::Trusted{});
}

RationalFn RationalFn::inverse() const {
    if (is_zero()) fail(ErrorCode::NotInvertible, "inverse of zero");
    Coeff li = inverse_mod_prime(num_.lead(), num_.q());
    return RationalFn(den_.scaled(li), num_.scaled(li), Trusted{});
}

std::string RationalFn::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.weight() > 1) n = "(" + n + ")";
    std::string d = den_.to_string();
    if (den_.weight() > 1 || den_.coeff(den_.degree()) != 1) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace tmot
