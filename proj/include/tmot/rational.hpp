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

#ifndef TMOT_RATIONAL_HPP
#define TMOT_RATIONAL_HPP

#include <string>

#include "tmot/poly.hpp"

namespace tmot {

/// Element of F_q(theta) kept in lowest terms with a monic denominator.
class RationalFn {
   public:
    RationalFn() = default;
    RationalFn(const Poly& num);  // NOLINT(google-explicit-constructor)
    RationalFn(const Poly& num, const Poly& den);

    static RationalFn constant(int q, long long c) { return RationalFn(Poly::constant(q, Var::Theta, c)); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    int q() const noexcept { return num_.q() != 0 ? num_.q() : den_.q(); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    /// Valuation at the infinite place: deg den - deg num.
    int valuation() const;

    RationalFn operator-() const { return RationalFn(-num_, den_, Trusted{}); }
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
    friend bool operator==(const RationalFn& a, const RationalFn& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Throws Error(NotInvertible) on zero.
    RationalFn inverse() const;
    /// Entry raised to the q^s-th power.
    RationalFn frobenius(int s = 1) const { return RationalFn(num_.frobenius(s), den_.frobenius(s), Trusted{}); }

    std::string to_string() const;

   private:
    struct Trusted {};
    RationalFn(Poly num, Poly den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_;
    Poly den_;
};

}  // namespace tmot

#endif
