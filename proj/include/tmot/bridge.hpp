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

#ifndef TMOT_BRIDGE_HPP
#define TMOT_BRIDGE_HPP

#include <vector>

#include "tmot/sigma.hpp"
#include "tmot/tmodule.hpp"

namespace tmot {

/// Element of F_q(theta)[tau] with tau a = a^q tau.
class SkewPoly {
   public:
    SkewPoly() = default;
    SkewPoly(int q, std::vector<RationalFn> c);

    int q() const noexcept { return q_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<RationalFn>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }

    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);
    friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.c_ == b.c_; }

    std::string to_string() const;

   private:
    void normalize();
    int q_ = 2;
    std::vector<RationalFn> c_;
};

/// An element of M: coordinates in F_q(theta)[t] on the module's basis.
using MotiveVector = std::vector<KtPoly>;

struct WMap {
    /// dim W_E x d over F_q[theta], rows saturated.
    KMatrix w;
    int dim = 0;
};

struct BridgeResult {
    TModule module;
    /// The K[tau]-basis m_1..m_d of M.
    std::vector<MotiveVector> basis;
    WMap w;
    /// All A_i and every reduction coefficient lie in F_q[theta].
    bool integral = true;
    /// Largest tau-level reached while reducing t m_j.
    int levels = 0;
    /// Places of degree one at which the Euler factors of both sides were compared.
    int checked_places = 0;
};

/// The abelian t-module of M. Every t m_j is written as sum_i P_ji(tau) m_i
/// and phi(t) has A_k[j][i] = the tau^k coefficient of P_ji. Checks that the
/// reduction reconstructs t m_j and the basis of M, and that Euler factors
/// read off E at rational places match those of M. Throws
/// Error(DegreeCapExceeded) if a reduction does not finish within
/// degree_cap levels or t-degree.
BridgeResult motive_to_module(const SigmaModule& m, int degree_cap = 64);

/// Projection Lie_E -> Lie_E / (t - theta) Lie_E as a matrix with
/// saturated integral rows; its image of O_K^d is O_K^dim.
WMap w_map(const TModule& e);

/// det(1 - X pi) of the reduction of E at a place of degree one, read off
/// det(t - sum A_k X^k). Throws Error(BadReduction) when some A_k is not
/// integral at the place.
EulerFactor module_euler_factor(const TModule& e, const Place& p);

}  // namespace tmot

#endif
