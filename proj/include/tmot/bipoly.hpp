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

#ifndef TMOT_BIPOLY_HPP
#define TMOT_BIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "tmot/error.hpp"
#include "tmot/poly.hpp"
#include "tmot/rational.hpp"

namespace tmot {

inline Poly exact_quotient(const Poly& a, const Poly& b) { return a.exact_div(b); }
inline RationalFn exact_quotient(const RationalFn& a, const RationalFn& b) { return a / b; }

inline Poly coeff_zero(int q, const Poly*) { return Poly(q, Var::Theta); }
inline RationalFn coeff_zero(int q, const RationalFn*) { return RationalFn(Poly(q, Var::Theta)); }

/// Polynomial in t whose coefficients are functions of theta (Poly for
/// F_q[theta][t], RationalFn for F_q(theta)[t]).
template <class C>
class TPoly {
   public:
    TPoly() = default;
    explicit TPoly(int q) : q_(q) {}
    TPoly(int q, std::vector<C> coeffs) : q_(q), c_(std::move(coeffs)) { normalize(); }

    static TPoly constant(int q, const C& c) { return TPoly(q, {c}); }
    /// t^k.
    static TPoly t_power(int q, int k) {
        std::vector<C> c(static_cast<std::size_t>(k) + 1, coeff_zero(q, static_cast<const C*>(nullptr)));
        c.back() = C(Poly::constant(q, Var::Theta, 1));
        return TPoly(q, std::move(c));
    }

    int q() const noexcept { return q_; }
    const std::vector<C>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1; }
    C coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return coeff_zero(q_, static_cast<const C*>(nullptr));
        return c_[static_cast<std::size_t>(k)];
    }

    TPoly operator-() const {
        TPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    TPoly& operator+=(const TPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), coeff_zero(q_, static_cast<const C*>(nullptr)));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    TPoly& operator-=(const TPoly& o) { return *this += -o; }
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        TPoly r(a.q_ != 0 ? a.q_ : b.q_);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, coeff_zero(r.q_, static_cast<const C*>(nullptr)));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.normalize();
        return r;
    }
    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }
    TPoly scaled(const C& s) const {
        TPoly r = *this;
        for (auto& x : r.c_) x = x * s;
        r.normalize();
        return r;
    }
    /// Multiplication by t^k.
    TPoly shifted(int k) const {
        TPoly r = *this;
        if (!r.c_.empty())
            r.c_.insert(r.c_.begin(), static_cast<std::size_t>(k), coeff_zero(q_, static_cast<const C*>(nullptr)));
        return r;
    }
    friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }

    /// Coefficientwise q^s-Frobenius on the theta side; t is left alone.
    TPoly frobenius(int s = 1) const {
        TPoly r = *this;
        for (auto& x : r.c_) x = x.frobenius(s);
        return r;
    }

    /// Value at t = theta.
    C at_theta() const {
        C acc = coeff_zero(q_, static_cast<const C*>(nullptr));
        const C th(Poly::monomial(q_, Var::Theta, 1));
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * th + c_[i];
        return acc;
    }

    /// Division by a divisor whose leading t-coefficient divides exactly;
    /// throws Error(Mismatch) if a remainder is left.
    TPoly exact_div(const TPoly& b) const {
        if (b.is_zero()) fail(ErrorCode::NotInvertible, "division by zero");
        TPoly rem = *this;
        if (rem.degree() < b.degree()) {
            if (!rem.is_zero()) fail(ErrorCode::Mismatch, "inexact division");
            return TPoly(q_);
        }
        const std::size_t db = b.c_.size() - 1;
        std::vector<C> quo(rem.c_.size() - db, coeff_zero(q_, static_cast<const C*>(nullptr)));
        for (std::size_t i = rem.c_.size(); i-- > db;) {
            if (rem.c_[i].is_zero()) continue;
            C k = exact_quotient(rem.c_[i], b.c_.back());
            quo[i - db] = k;
            for (std::size_t j = 0; j <= db; ++j) rem.c_[i - db + j] -= k * b.c_[j];
        }
        rem.normalize();
        if (!rem.is_zero()) fail(ErrorCode::Mismatch, "inexact division");
        return TPoly(q_, std::move(quo));
    }

    /// Remainder modulo a divisor with invertible leading coefficient.
    TPoly mod(const TPoly& b) const {
        TPoly rem = *this;
        if (rem.degree() < b.degree()) return rem;
        const std::size_t db = b.c_.size() - 1;
        const C inv_lead = C(Poly::constant(q_, Var::Theta, 1)) / b.c_.back();
        for (std::size_t i = rem.c_.size(); i-- > db;) {
            if (rem.c_[i].is_zero()) continue;
            C k = rem.c_[i] * inv_lead;
            for (std::size_t j = 0; j <= db; ++j) rem.c_[i - db + j] -= k * b.c_[j];
        }
        rem.c_.resize(db, coeff_zero(q_, static_cast<const C*>(nullptr)));
        rem.normalize();
        return rem;
    }

    std::string to_string() const;

   private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    int q_ = 0;
    std::vector<C> c_;
};

using BiPoly = TPoly<Poly>;
using KtPoly = TPoly<RationalFn>;

/// Text form in t and x, e.g. "t^2+t*x+x^2".
std::string to_string(const BiPoly& p);
std::string to_string(const KtPoly& p);

template <class C>
std::string TPoly<C>::to_string() const {
    return ::tmot::to_string(*this);
}

KtPoly to_kt(const BiPoly& p);
/// Throws Error(Mismatch) if some coefficient is not a polynomial in theta.
BiPoly to_bipoly(const KtPoly& p);

}  // namespace tmot

#endif
