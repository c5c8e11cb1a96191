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

#ifndef TMOT_POLY_HPP
#define TMOT_POLY_HPP

#include <climits>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tmot/field.hpp"

namespace tmot {

/// The two polynomial variables kept apart throughout: t generates the
/// coefficient ring A = F_q[t], theta generates the base ring O_K = F_q[theta].
/// In text, theta is written `x`.
enum class Var { T, Theta };

constexpr char var_letter(Var v) noexcept { return v == Var::T ? 't' : 'x'; }

/// Degree of the zero polynomial.
inline constexpr int kDegNegInf = INT_MIN;

/// Dense univariate polynomial over F_q, little-endian, no trailing zeros.
///
/// A default-constructed Poly is the zero polynomial with an unset modulus
/// (q() == 0); it adopts the modulus of the other operand in arithmetic.
class Poly {
   public:
    Poly() = default;
    Poly(int q, Var var) : q_(q), var_(var) {}
    Poly(int q, Var var, std::vector<Coeff> coeffs);

    static Poly constant(int q, Var var, long long c);
    static Poly monomial(int q, Var var, int degree, long long c = 1);
    /// x - c, a linear polynomial.
    static Poly linear(int q, Var var, long long c);

    int q() const noexcept { return q_; }
    Var var() const noexcept { return var_; }
    const std::vector<Coeff>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    int degree() const noexcept { return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1; }
    Coeff coeff(int i) const noexcept {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Coeff{0};
    }
    Coeff lead() const noexcept { return c_.empty() ? Coeff{0} : c_.back(); }
    /// Number of nonzero coefficients.
    int weight() const noexcept;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(long long c) const;
    /// Multiplication by x^k (k >= 0).
    Poly shifted(int k) const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.c_ == b.c_; }

    /// Euclidean division; throws Error(NotInvertible) for a zero divisor.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
    /// Quotient, asserting a zero remainder (throws Error(Mismatch) otherwise).
    Poly exact_div(const Poly& b) const;

    Poly monic() const;
    Poly pow(unsigned long long e) const;
    /// p(x)^(q^s): in characteristic p with q prime this spreads exponents by q^s.
    Poly frobenius(int s = 1) const;
    /// p(x^k) for k >= 1.
    Poly inflate(long long k) const;
    Poly with_var(Var v) const;
    Coeff eval(Coeff x) const;
    /// Lexicographic rank of a monic polynomial among monic polynomials of its degree.
    std::uint64_t lex_index() const;
    static Poly from_lex_index(int q, Var var, int degree, std::uint64_t index);

    std::string to_string() const;

   private:
    void normalize();
    int q_ = 0;
    Var var_ = Var::Theta;
    std::vector<Coeff> c_;
};

/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

struct Xgcd {
    Poly g, u, v;  // u*a + v*b = g, g monic
};
Xgcd xgcd(const Poly& a, const Poly& b);

/// base^e mod m for possibly huge exponents given as q^k via repeated Frobenius.
Poly pow_mod(const Poly& base, unsigned long long e, const Poly& m);
/// base^(q^k) mod m.
Poly frobenius_mod(const Poly& base, int k, const Poly& m);

/// b with a*b = 1 mod v and deg b < deg v. Throws NotInvertible when
/// a = 0 mod v; when check_irreducible is set, throws NotIrreducible if v is
/// reducible.
Poly poly_inv_mod(const Poly& a, const Poly& v, bool check_irreducible = false);

/// v irreducible iff x^(q^d) = x mod v and gcd(x^(q^(d/p)) - x, v) = 1 for
/// each prime p | d.
bool is_irreducible(const Poly& v);

}  // namespace tmot

#endif
