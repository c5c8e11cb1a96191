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

#include "tmot/verify.hpp"

#include <algorithm>

#include "tmot/error.hpp"

namespace tmot {

namespace {

void require_integral(const std::vector<RationalFn>& z, std::size_t i) {
    for (const RationalFn& c : z)
        if (!c.is_polynomial())
            fail(ErrorCode::Mismatch, "point " + std::to_string(i + 1) + " is not in E(O_K): " + c.to_string());
}

std::vector<RationalFn> unit_vector(int q, int d, int i) {
    std::vector<RationalFn> z(static_cast<std::size_t>(d), RationalFn::constant(q, 0));
    z[static_cast<std::size_t>(i)] = RationalFn::constant(q, 1);
    return z;
}

KInfPoint apply_w(const KMatrix& w, const KInfPoint& x, int precision) {
    KInfPoint out;
    for (const auto& row : w) {
        LaurentSeries acc(x[0].q(), Var::Theta, precision);
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero()) acc += LaurentSeries::from_rational(row[j], precision + 64) * x[j];
        out.push_back(acc);
    }
    return out;
}

void finish(LatticeReport& r) {
    const int x = r.precision;
    if (r.ratio.precision() <= 0) {
        r.constant = 0;
        r.deviation = 0;
    } else {
        r.constant = r.ratio.coeff(0);
        LaurentSeries diff = r.ratio - LaurentSeries::monomial(r.ratio.q(), Var::Theta, 0, r.constant, r.ratio.precision());
        r.deviation = diff.is_zero() ? r.ratio.precision() : -diff.lead_exp();
    }
    r.deviation = std::min(r.deviation, x);
}

}  // namespace

LatticeReport verify_conjecture(const SigmaModule& m, std::vector<std::vector<RationalFn>> points,
                                const PrecisionPolicy& policy, const std::vector<Poly>& excluded) {
    const int q = m.q();
    BridgeResult b = motive_to_module(m);
    const int d = b.module.dim();
    const int k = b.w.dim;
    const int x = policy.precision;
    SeriesCache cache(b.module);

    LatticeReport rep;
    rep.dim_w = k;
    rep.precision = x;

    if (points.empty()) {
        for (int i = 0; i < d && static_cast<int>(points.size()) < k; ++i) {
            auto z = unit_vector(q, d, i);
            try {
                cache.log(point_from_rational(z, x + policy.guard), x);
                points.push_back(z);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::Divergent) throw;
            }
        }
        if (static_cast<int>(points.size()) < k)
            fail(ErrorCode::LogDivergent, "fewer than " + std::to_string(k) + " unit vectors have convergent logarithms");
    }
    if (static_cast<int>(points.size()) != k)
        fail(ErrorCode::DimensionMismatch, "need " + std::to_string(k) + " points, got " + std::to_string(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (static_cast<int>(points[i].size()) != d)
            fail(ErrorCode::DimensionMismatch, "point " + std::to_string(i + 1) + " has the wrong dimension");
        require_integral(points[i], i);
    }
    rep.points = points;

    rep.l = l_value_of_module(m, policy, excluded);
    rep.denominator = substitute_t_theta(rep.l.series);

    const LaurentSeries one = LaurentSeries::monomial(q, Var::Theta, 0, 1, 1 << 20);
    for (int work = x + policy.guard;; work += x) {
        Matrix<LaurentSeries> cols;
        for (std::size_t i = 0; i < points.size(); ++i) {
            Evaluation ev;
            try {
                ev = cache.log(point_from_rational(points[i], work), work);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::Divergent) throw;
                fail(ErrorCode::LogDivergent, "log_E of point " + std::to_string(i + 1) + " diverges: " + e.what());
            }
            cols.push_back(apply_w(b.w.w, ev.value, work));
        }
        rep.numerator = leibniz_det(transpose(cols), one);
        if (rep.numerator.precision() >= x + std::max(0, rep.numerator.lead_exp()) || work > 8 * x + 64) break;
    }
    rep.ratio = (rep.numerator * rep.denominator.inverse()).truncated(x);
    finish(rep);
    if (rep.constant != 0 && rep.deviation > 0)
        rep.verdict = "consistent with the conjecture to theta^-" + std::to_string(rep.deviation);
    else
        rep.verdict = "ratio is not a constant plus a small tail";
    if (!b.integral) rep.verdict += " (presentation not integral; covolume not rescaled)";
    return rep;
}

LatticeReport verify_logalg(const SigmaModule& m, const PrecisionPolicy& policy, const std::vector<Poly>& excluded) {
    const int q = m.q();
    BridgeResult b = motive_to_module(m);
    if (b.module.dim() != 1) fail(ErrorCode::DimensionMismatch, "verify_logalg expects a Drinfeld module");
    const int x = policy.precision;
    SeriesCache cache(b.module);

    LatticeReport rep;
    rep.dim_w = b.w.dim;
    rep.precision = x;
    rep.l = l_value_of_module(m, policy, excluded);
    rep.denominator = substitute_t_theta(rep.l.series);
    rep.points = {{RationalFn::constant(q, 1)}};
    rep.y = cache.exp({rep.denominator}, x).value;
    IntegralPart ip = nearest_integral(rep.y, x);
    rep.integral_part = ip.poly;
    rep.ratio = rep.y[0];
    rep.numerator = rep.y[0];
    finish(rep);
    rep.deviation = std::min(ip.deviation, rep.y[0].precision());
    rep.deviation = std::min(rep.deviation, x);
    rep.verdict = "exp_E(L(E,0) e) lies within theta^-" + std::to_string(rep.deviation) + " of " +
                  ip.poly[0].to_string() + " in E(O_K)";
    return rep;
}

}  // namespace tmot
