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

#ifndef TMOT_SIGMA_HPP
#define TMOT_SIGMA_HPP

#include <string>
#include <vector>

#include "tmot/bipoly.hpp"
#include "tmot/linalg.hpp"
#include "tmot/places.hpp"
#include "tmot/rational.hpp"

namespace tmot {

/// Default cap on the rank of constructed modules.
inline constexpr int kDefaultRankCap = 64;

/// A sigma-module on a free F_q[theta][t]-basis with
/// sigma(m_j) = sum_i Sigma[i][j] m_i, stored as Sigma = num / g with num
/// integral and g(theta) a common denominator. Places dividing g are places
/// of bad reduction for this presentation.
///
/// Construction checks effectivity: det Sigma = alpha (t - theta)^n with
/// alpha in F_q^x; otherwise Error(NotEffective).
class SigmaModule {
   public:
    static SigmaModule from_matrix(int q, Matrix<BiPoly> num, Poly g = Poly());

    int q() const noexcept { return q_; }
    int rank() const noexcept { return static_cast<int>(num_.size()); }
    const Matrix<BiPoly>& numerator() const noexcept { return num_; }
    const Poly& denominator() const noexcept { return g_; }
    Coeff alpha() const noexcept { return alpha_; }
    int n() const noexcept { return n_; }
    /// Sigma over F_q(theta)[t].
    Matrix<KtPoly> sigma() const;
    bool good_at(const Place& p) const { return !(g_ % p.v).is_zero() || g_.is_constant(); }

    std::string to_string() const;

   private:
    SigmaModule() = default;
    int q_ = 2;
    Matrix<BiPoly> num_;
    Poly g_;
    Coeff alpha_ = 1;
    int n_ = 0;
};

SigmaModule carlitz_power(int q, int n);
/// The motive of theta + a_1 tau + ... + a_r tau^r on the basis 1, tau, ..., tau^(r-1).
/// Throws Error(BadLeadingCoeff) unless a_r is a nonzero constant.
SigmaModule drinfeld_motive(int q, const std::vector<RationalFn>& a);
SigmaModule trivial_module(int q);
SigmaModule tensor(const SigmaModule& a, const SigmaModule& b, int rank_cap = kDefaultRankCap);
SigmaModule sym2(const SigmaModule& m, int rank_cap = kDefaultRankCap);
SigmaModule det_module(const SigmaModule& m);
/// M^dual tensor C^(tensor n) with matrix alpha^-1 adj(Sigma)^T.
SigmaModule dual_twist(const SigmaModule& m);
SigmaModule direct_sum(const SigmaModule& a, const SigmaModule& b, int rank_cap = kDefaultRankCap);
/// The same module on the basis given by the columns of U^-1, i.e. with
/// matrix U Sigma (U^-1)^(q). u_inv must be the inverse of u.
SigmaModule change_basis(const SigmaModule& m, const Matrix<BiPoly>& u, const Matrix<BiPoly>& u_inv);

/// det(1 - X B) with B the d(v)-fold Frobenius product; coeffs[j] multiplies X^j.
struct EulerFactor {
    Place place;
    std::vector<Poly> coeffs;  // polynomials in t, coeffs[0] = 1

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::string to_string() const;
};

/// Throws Error(BadReduction) at places dividing the denominator and
/// Error(DescentFailure) if a coefficient fails to lie in F_q[t].
EulerFactor euler_factor(const SigmaModule& m, const Place& p);
/// Slow path on generic polynomial arithmetic; used as a cross-check.
EulerFactor euler_factor_reference(const SigmaModule& m, const Place& p);

/// Exact rational number.
struct Fraction {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend bool operator<(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }
    std::string to_string() const;
};
Fraction make_fraction(long long num, long long den);

/// Newton slopes (valuation -deg_t, per Frobenius step) of one Euler factor.
std::vector<Fraction> factor_slopes(const EulerFactor& f);
/// Slopes read off the Euler factors at the good places of degree 1 and 2;
/// at each position the slope of largest magnitude is kept.
std::vector<Fraction> slopes_of(const SigmaModule& m);
/// As slopes_of, but throws Error(NotFinitelyGenerated) if a slope is >= 0.
std::vector<Fraction> newton_slopes(const SigmaModule& m);
/// max |lambda_i|.
Fraction max_slope_magnitude(const std::vector<Fraction>& slopes);

}  // namespace tmot

#endif
