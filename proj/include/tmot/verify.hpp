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

#ifndef TMOT_VERIFY_HPP
#define TMOT_VERIFY_HPP

#include <string>
#include <vector>

#include "tmot/bridge.hpp"
#include "tmot/lseries.hpp"

namespace tmot {

struct LatticeReport {
    LValueResult l;
    int dim_w = 0;
    /// Points used, one coordinate vector each.
    std::vector<std::vector<RationalFn>> points;
    /// det [w(log z_1) ... w(log z_k)].
    LaurentSeries numerator;
    /// L(E,0) with t replaced by theta, times the W_E(O_K) covolume.
    LaurentSeries denominator;
    LaurentSeries ratio;
    /// Constant term of the ratio.
    Coeff constant = 0;
    /// Valuation of ratio - constant, capped at the ratio's precision.
    int deviation = 0;
    int precision = 0;
    /// verify_logalg: exp_E(L e) and its nearest integral point.
    KInfPoint y;
    std::vector<Poly> integral_part;
    std::string verdict;
};

/// Compares det w(Z) against L(E,0) for Z spanned by log_E of the given
/// integral points (default: the first unit vectors whose logs converge).
/// Throws Error(LogDivergent) naming the point whose log diverges and
/// Error(DimensionMismatch) if the number of points is not dim W_E.
LatticeReport verify_conjecture(const SigmaModule& m, std::vector<std::vector<RationalFn>> points,
                                const PrecisionPolicy& policy, const std::vector<Poly>& excluded = {});

/// For a Drinfeld motive: y = exp_E(L(E,0) e) with e = 1 and its distance
/// from E(O_K).
LatticeReport verify_logalg(const SigmaModule& m, const PrecisionPolicy& policy,
                            const std::vector<Poly>& excluded = {});

}  // namespace tmot

#endif
