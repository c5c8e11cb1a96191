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

#ifndef TMOT_TMODULE_HPP
#define TMOT_TMODULE_HPP

#include <string>
#include <vector>

#include "tmot/laurent.hpp"
#include "tmot/linalg.hpp"

namespace tmot {

/// phi(t) = A_0 + A_1 tau + ... + A_k tau^k acting on G_a^d over F_q(theta).
/// A_0 - theta must be nilpotent and A_k nonzero.
class TModule {
   public:
    TModule(int q, std::vector<KMatrix> a);

    int q() const noexcept { return q_; }
    int dim() const noexcept { return static_cast<int>(a_[0].size()); }
    /// The tau-degree k.
    int degree() const noexcept { return static_cast<int>(a_.size()) - 1; }
    const std::vector<KMatrix>& coeffs() const noexcept { return a_; }
    const KMatrix& coeff(int i) const { return a_.at(static_cast<std::size_t>(i)); }
    /// A_0 - theta.
    KMatrix nilpotent() const;

    /// One line per coordinate, e.g. "x*x1 + x1^q + x2^(q^2)".
    std::vector<std::string> action_lines() const;
    std::string to_string() const;

   private:
    int q_;
    std::vector<KMatrix> a_;
};

TModule carlitz_module(int q);
/// theta + a_1 tau + ... + a_r tau^r.
TModule drinfeld_module(int q, const std::vector<RationalFn>& a);

/// sum c_i tau^i with d x d coefficients; used for exp_E and log_E.
struct TauSeries {
    int q = 2;
    std::vector<KMatrix> c;
    int order() const { return static_cast<int>(c.size()) - 1; }
};
using ExpSeries = TauSeries;
using LogSeries = TauSeries;

/// e_0 = I and e_i A_0^[q^i] - A_0 e_i = sum_{j=1}^{min(i,k)} A_j e_{i-j}^[q^j].
/// Throws Error(SylvesterSingular) if the solve fails its own check.
ExpSeries exp_coefficients(const TModule& e, int m);
/// Extends s in place to order m.
void extend_exp(const TModule& e, ExpSeries& s, int m);
/// l_0 = I and l_n = -(e_1 l_{n-1}^[q] + ... + e_n l_0^[q^n]). Also checks
/// log o exp = 1 to order m (Error(Mismatch) otherwise).
LogSeries log_coefficients(const ExpSeries& exp, int m);
void extend_log(const ExpSeries& exp, LogSeries& s, int m);
/// a o b truncated after tau^m.
TauSeries compose(const TauSeries& a, const TauSeries& b, int m);
TauSeries as_series(const TModule& e);

using KInfPoint = std::vector<LaurentSeries>;

KInfPoint point_from_rational(const std::vector<RationalFn>& x, int precision);
KInfPoint zero_point(int q, int d, int precision);
std::string to_string(const KInfPoint& x);

struct Evaluation {
    KInfPoint value;
    int terms = 0;
    /// Lower bounds for the valuations of the terms that were examined.
    std::vector<long long> term_valuations;
};

/// sum c_i x^[q^i] modulo theta^-precision. Stops once a term's valuation
/// exceeds the precision while still increasing. Throws Error(Divergent)
/// after `patience` consecutive non-increasing term valuations below the
/// precision, Error(InsufficientOrder) if the series runs out first.
Evaluation evaluate(const TauSeries& s, const KInfPoint& x, int precision, int patience = 3);

/// exp_E and log_E with coefficient orders grown on demand.
class SeriesCache {
   public:
    explicit SeriesCache(TModule e, int max_order = 48) : e_(std::move(e)), max_order_(max_order) {}
    const TModule& module() const noexcept { return e_; }
    Evaluation exp(const KInfPoint& x, int precision);
    Evaluation log(const KInfPoint& x, int precision);
    const ExpSeries& exp_series(int m);
    const LogSeries& log_series(int m);

   private:
    TModule e_;
    int max_order_;
    ExpSeries exp_;
    LogSeries log_;
};

struct IntegralPart {
    std::vector<Poly> poly;
    /// Valuation of the largest non-integral term, or the precision when
    /// every known tail digit vanishes.
    int deviation = 0;
};

/// Splits y into polynomial parts and tails. Throws Error(DegreeExceeded)
/// if a polynomial part has degree above degree_bound.
IntegralPart nearest_integral(const KInfPoint& y, int degree_bound);

}  // namespace tmot

#endif
