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

#ifndef TMOT_LSERIES_HPP
#define TMOT_LSERIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tmot/laurent.hpp"
#include "tmot/sigma.hpp"

namespace tmot {

enum class PrecisionMode { Rigorous, Empirical };

std::string mode_name(PrecisionMode m);
PrecisionMode parse_mode(const std::string& s);

struct PrecisionPolicy {
    /// Target: the result is known modulo t^-precision.
    int precision = 10;
    PrecisionMode mode = PrecisionMode::Empirical;
    int max_degree = 20;
    /// Empirical mode stops after this many consecutive degrees leave every
    /// coefficient above t^-precision untouched.
    int window = 4;
    /// Extra degrees multiplied in after stabilization; any change there is
    /// reported as Error(PolicyExhausted).
    int confirm = 0;
    int guard = 8;
    int shards = 1;
    /// Empty: no checkpointing.
    std::string checkpoint;
};

struct DegreeLog {
    int degree = 0;
    std::uint64_t places = 0;
    /// Highest exponent above t^-precision whose coefficient changed.
    std::optional<int> frontier;
    double seconds = 0;
};

struct LValueResult {
    LaurentSeries series;
    PrecisionPolicy policy;
    int degrees_used = 0;
    std::uint64_t places = 0;
    std::vector<DegreeLog> log;
    /// max |slope| of the module, when n exceeds it.
    std::optional<Fraction> mu;
    /// Stopped because the slope bound shows later degrees change nothing.
    bool certified = false;
    /// Empirical mode: stopped on the stabilization window.
    bool stabilized = false;
};

/// Partial Euler product of prod P_v(Nv^-n)^-1 over places of degree at
/// most the policy's bound, skipping the excluded places.
///
/// Rigorous mode throws Error(Divergent) unless n > mu and truncates to the
/// precision the slope bound justifies; every factor is checked against the
/// bound (Error(SlopeBoundViolated)). Empirical mode throws
/// Error(PolicyExhausted) if no stabilization is seen by max_degree.
LValueResult l_value(const SigmaModule& m, int n, const PrecisionPolicy& policy,
                     const std::vector<Poly>& excluded = {});
/// L(M^dual, 0) computed as l_value(dual_twist(M), n) with n from M's determinant.
LValueResult l_value_of_module(const SigmaModule& m, const PrecisionPolicy& policy,
                               const std::vector<Poly>& excluded = {});

/// Inverse of P_v(Nv^-n) to precision w.
LaurentSeries euler_factor_inverse(const EulerFactor& f, int n, int w);

/// Sum of f^-n over monic f of degree at most max_deg, known modulo t^-(n(max_deg+1)).
LaurentSeries zeta_direct(int q, int n, int max_deg);
/// Sum of alpha^deg(f) / f over monic f of degree at most max_deg.
LaurentSeries rank1_twisted_sum(int q, long long alpha, int max_deg);

}  // namespace tmot

#endif
