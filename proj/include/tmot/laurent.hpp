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

#ifndef TMOT_LAURENT_HPP
#define TMOT_LAURENT_HPP

#include <string>
#include <vector>

#include "tmot/poly.hpp"
#include "tmot/rational.hpp"

namespace tmot {

/// Truncated Laurent series in 1/x over F_q, x being t or theta.
///
/// A series with precision N knows every coefficient at exponents > -N and
/// nothing below. Arithmetic derives the precision of each result from the
/// operands: the minimum for sums, and for a product a*b the bound
/// min(N_b - v_a, N_a - v_b) with v the leading exponent (-N for a series
/// that is zero to its precision).
class LaurentSeries {
   public:
    LaurentSeries() = default;
    /// Zero to precision n.
    LaurentSeries(int q, Var var, int n) : q_(q), var_(var), top_(-n), prec_(n) {}

    static LaurentSeries from_poly(const Poly& p, int n);
    static LaurentSeries from_rational(const Poly& num, const Poly& den, int n);
    static LaurentSeries from_rational(const RationalFn& r, int n) { return from_rational(r.num(), r.den(), n); }
    static LaurentSeries monomial(int q, Var var, int exponent, long long c, int n);
    /// Builds from coefficients listed from the top exponent downwards.
    static LaurentSeries from_coeffs(int q, Var var, int top, std::vector<Coeff> coeffs, int n);

    int q() const noexcept { return q_; }
    Var var() const noexcept { return var_; }
    int precision() const noexcept { return prec_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Exponent of the leading nonzero term, or -precision() for a zero series.
    int lead_exp() const noexcept { return top_; }
    Coeff lead() const noexcept { return c_.empty() ? Coeff{0} : c_[0]; }
    /// Coefficient of x^e; throws std::out_of_range when e <= -precision().
    Coeff coeff(int e) const;
    /// Exponents of nonzero terms, descending.
    std::vector<int> support() const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }
    /// Same known digits and same precision.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) noexcept {
        return a.q_ == b.q_ && a.var_ == b.var_ && a.prec_ == b.prec_ && a.top_ == b.top_ && a.c_ == b.c_;
    }

    LaurentSeries scaled(long long c) const;
    /// Multiplication by x^k.
    LaurentSeries shifted(int k) const;
    /// Throws Error(ZeroLeadingTerm) if the series is zero to its precision.
    LaurentSeries inverse() const;
    /// Forgets everything at exponents <= -n (no-op if n >= precision()).
    LaurentSeries truncated(int n) const;
    /// The q^s-th power, keeping at most precision cap.
    LaurentSeries frobenius(int s, int cap) const;
    LaurentSeries with_var(Var v) const;
    /// True when both agree at every exponent > -n known to both.
    bool agrees_with(const LaurentSeries& o, int n) const;

    std::string to_string() const;

   private:
    void normalize();
    int q_ = 2;
    Var var_ = Var::T;
    int top_ = 0;
    int prec_ = 0;
    std::vector<Coeff> c_;  // c_[k] is the coefficient of x^(top_ - k)
};

/// Relabels a series in t as a series in theta.
inline LaurentSeries substitute_t_theta(const LaurentSeries& s) { return s.with_var(Var::Theta); }

inline LaurentSeries rational_to_laurent(const RationalFn& r, int n) { return LaurentSeries::from_rational(r, n); }

/// Parses the printed form, e.g. "1 + t^-2 + 2*t^-8 + O(t^-11)".
LaurentSeries parse_laurent(const std::string& text, int q);

}  // namespace tmot

#endif
