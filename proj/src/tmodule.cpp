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

#include "tmot/tmodule.hpp"

#include <algorithm>
#include <climits>

#include "tmot/error.hpp"

namespace tmot {

namespace {

RationalFn theta(int q) { return RationalFn(Poly::monomial(q, Var::Theta, 1)); }

KMatrix theta_identity(int q, std::size_t d) { return scaled(identity_matrix(q, d), theta(q)); }

bool square(const KMatrix& a, std::size_t d) {
    if (a.size() != d) return false;
    return std::all_of(a.begin(), a.end(), [&](const auto& row) { return row.size() == d; });
}

long long sat_mul(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > 0 && b > 0 && a > LLONG_MAX / b) return LLONG_MAX;
    if (a < 0 && b > 0 && a < LLONG_MIN / b) return LLONG_MIN;
    return a * b;
}

long long sat_pow(long long q, int i) {
    long long r = 1;
    for (int k = 0; k < i; ++k) r = sat_mul(r, q);
    return r;
}

int clamp_int(long long v) { return static_cast<int>(std::clamp<long long>(v, 1, INT_MAX / 4)); }

}  // namespace

TModule::TModule(int q, std::vector<KMatrix> a) : q_(q), a_(std::move(a)) {
    if (a_.empty() || a_[0].empty()) fail(ErrorCode::DimensionMismatch, "t-module needs A_0");
    const std::size_t d = a_[0].size();
    for (const KMatrix& m : a_)
        if (!square(m, d)) fail(ErrorCode::DimensionMismatch, "t-module coefficients must be square of one size");
    while (a_.size() > 1 && is_zero(a_.back())) a_.pop_back();
    if (a_.size() < 2) fail(ErrorCode::DimensionMismatch, "t-module has no tau terms");
    KMatrix n = nilpotent(), p = n;
    for (std::size_t k = 1; k < d; ++k) p = p * n;
    if (!is_zero(p)) fail(ErrorCode::SylvesterSingular, "A_0 - theta is not nilpotent");
}

KMatrix TModule::nilpotent() const { return a_[0] - theta_identity(q_, a_[0].size()); }

std::vector<std::string> TModule::action_lines() const {
    std::vector<std::string> lines;
    const std::size_t d = a_[0].size();
    for (std::size_t r = 0; r < d; ++r) {
        std::string line;
        for (std::size_t j = 0; j < a_.size(); ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const RationalFn& c = a_[j][r][k];
                if (c.is_zero()) continue;
                std::string var = "x" + std::to_string(k + 1);
                if (j == 1) var += "^q";
                if (j > 1) var += "^(q^" + std::to_string(j) + ")";
                std::string coef;
                if (!c.is_one()) {
                    const std::string cs = c.to_string();
                    const bool simple = c.is_polynomial() && c.num().degree() <= 1 &&
                                        (c.num().degree() == 0 || c.num().coeff(0) == 0);
                    coef = (simple ? cs : "(" + cs + ")") + "*";
                }
                if (!line.empty()) line += " + ";
                line += coef + var;
            }
        lines.push_back(line.empty() ? "0" : line);
    }
    return lines;
}

std::string TModule::to_string() const {
    std::string s;
    for (const std::string& l : action_lines()) s += (s.empty() ? "" : "; ") + l;
    return "phi(t): " + s;
}

TModule carlitz_module(int q) { return drinfeld_module(q, {RationalFn::constant(q, 1)}); }

TModule drinfeld_module(int q, const std::vector<RationalFn>& a) {
    std::vector<KMatrix> m{theta_identity(q, 1)};
    for (const RationalFn& c : a) m.push_back(KMatrix{{c}});
    return TModule(q, std::move(m));
}

void extend_exp(const TModule& e, ExpSeries& s, int m) {
    const int q = e.q();
    const std::size_t d = static_cast<std::size_t>(e.dim());
    if (s.c.empty()) {
        s.q = q;
        s.c.push_back(identity_matrix(q, d));
    }
    const KMatrix n = e.nilpotent();
    const KMatrix& a0 = e.coeff(0);
    for (int i = s.order() + 1; i <= m; ++i) {
        KMatrix r = zero_matrix(q, d, d);
        for (int j = 1; j <= std::min(i, e.degree()); ++j)
            r = r + e.coeff(j) * frobenius(s.c[static_cast<std::size_t>(i - j)], j);
        const RationalFn c = theta(q).frobenius(i) - theta(q);
        const RationalFn cinv = c.inverse();
        const KMatrix nq = frobenius(n, i);
        KMatrix x = zero_matrix(q, d, d), term = r;
        RationalFn pw = cinv;
        for (std::size_t k = 0; k < 2 * d && !is_zero(term); ++k) {
            x = x + scaled(term, pw);
            term = n * term - term * nq;
            pw *= cinv;
        }
        if (!is_zero(x * frobenius(a0, i) - a0 * x - r))
            fail(ErrorCode::SylvesterSingular, "exp recursion failed at order " + std::to_string(i));
        s.c.push_back(std::move(x));
    }
}

ExpSeries exp_coefficients(const TModule& e, int m) {
    if (m < 0) throw std::invalid_argument("order must be >= 0");
    ExpSeries s;
    extend_exp(e, s, m);
    return s;
}

void extend_log(const ExpSeries& exp, LogSeries& s, int m) {
    if (m > exp.order()) throw std::invalid_argument("log order exceeds exp order");
    const int q = exp.q;
    const std::size_t d = exp.c[0].size();
    if (s.c.empty()) {
        s.q = q;
        s.c.push_back(identity_matrix(q, d));
    }
    for (int n = s.order() + 1; n <= m; ++n) {
        KMatrix l = zero_matrix(q, d, d);
        for (int i = 1; i <= n; ++i)
            l = l - exp.c[static_cast<std::size_t>(i)] * frobenius(s.c[static_cast<std::size_t>(n - i)], i);
        s.c.push_back(std::move(l));
        KMatrix back = zero_matrix(q, d, d);
        for (int i = 0; i <= n; ++i)
            back = back + s.c[static_cast<std::size_t>(i)] * frobenius(exp.c[static_cast<std::size_t>(n - i)], i);
        if (!is_zero(back)) fail(ErrorCode::Mismatch, "log o exp is not the identity at order " + std::to_string(n));
    }
}

LogSeries log_coefficients(const ExpSeries& exp, int m) {
    LogSeries s;
    extend_log(exp, s, m);
    return s;
}

TauSeries compose(const TauSeries& a, const TauSeries& b, int m) {
    const std::size_t d = a.c[0].size();
    TauSeries out{a.q, {}};
    for (int n = 0; n <= m; ++n) {
        KMatrix acc = zero_matrix(a.q, d, d);
        for (int i = 0; i <= std::min(n, a.order()); ++i) {
            if (n - i > b.order()) continue;
            acc = acc + a.c[static_cast<std::size_t>(i)] * frobenius(b.c[static_cast<std::size_t>(n - i)], i);
        }
        out.c.push_back(std::move(acc));
    }
    return out;
}

TauSeries as_series(const TModule& e) { return TauSeries{e.q(), e.coeffs()}; }

KInfPoint point_from_rational(const std::vector<RationalFn>& x, int precision) {
    KInfPoint p;
    for (const RationalFn& v : x) p.push_back(LaurentSeries::from_rational(v, precision));
    return p;
}

KInfPoint zero_point(int q, int d, int precision) {
    return KInfPoint(static_cast<std::size_t>(d), LaurentSeries(q, Var::Theta, precision));
}

std::string to_string(const KInfPoint& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + x[i].to_string();
    return s + ")";
}

Evaluation evaluate(const TauSeries& s, const KInfPoint& x, int precision, int patience) {
    const std::size_t d = s.c[0].size();
    if (x.size() != d) fail(ErrorCode::DimensionMismatch, "point has the wrong dimension");
    const int q = s.q;
    Evaluation ev;
    ev.value = zero_point(q, static_cast<int>(d), precision);
    long long prev = 0;
    int stalls = 0;
    for (int i = 0;; ++i) {
        if (i > s.order())
            fail(ErrorCode::InsufficientOrder, "series order " + std::to_string(s.order()) + " too small");
        const KMatrix& c = s.c[static_cast<std::size_t>(i)];
        const long long qi = sat_pow(q, i);
        long long val = LLONG_MAX;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t k = 0; k < d; ++k) {
                if (c[r][k].is_zero()) continue;
                const long long xv = x[k].is_zero() ? x[k].precision() : -static_cast<long long>(x[k].lead_exp());
                val = std::min(val, c[r][k].valuation() + sat_mul(qi, xv));
            }
        ev.term_valuations.push_back(val);
        if (i > 0 && val >= precision && (val > prev || val == LLONG_MAX)) {
            ev.terms = i;
            break;
        }
        if (i > 0) {
            stalls = val <= prev ? stalls + 1 : 0;
            if (stalls >= patience)
                fail(ErrorCode::Divergent, "term valuations stopped increasing at term " + std::to_string(i));
        }
        prev = val;
        if (val >= precision) continue;
        for (std::size_t k = 0; k < d; ++k) {
            long long lead_c = LLONG_MIN;
            for (std::size_t r = 0; r < d; ++r)
                if (!c[r][k].is_zero()) lead_c = std::max<long long>(lead_c, -c[r][k].valuation());
            if (lead_c == LLONG_MIN) continue;
            const LaurentSeries xq = x[k].frobenius(i, clamp_int(precision + lead_c + 1));
            const long long xlead = x[k].is_zero() ? -x[k].precision() : x[k].lead_exp();
            const int nc = clamp_int(precision + sat_mul(qi, xlead) + 1);
            for (std::size_t r = 0; r < d; ++r) {
                if (c[r][k].is_zero()) continue;
                ev.value[r] += LaurentSeries::from_rational(c[r][k], nc) * xq;
            }
        }
    }
    for (auto& v : ev.value) v = v.truncated(precision);
    return ev;
}

const ExpSeries& SeriesCache::exp_series(int m) {
    if (exp_.order() < m) extend_exp(e_, exp_, m);
    return exp_;
}

const LogSeries& SeriesCache::log_series(int m) {
    exp_series(m);
    if (log_.order() < m) extend_log(exp_, log_, m);
    return log_;
}

Evaluation SeriesCache::exp(const KInfPoint& x, int precision) {
    for (int m = std::max(4, exp_.order());; m = std::min(2 * m, max_order_)) {
        try {
            return evaluate(exp_series(m), x, precision);
        } catch (const Error& err) {
            if (err.code() != ErrorCode::InsufficientOrder || m >= max_order_) throw;
        }
    }
}

Evaluation SeriesCache::log(const KInfPoint& x, int precision) {
    for (int m = std::max(4, log_.order());; m = std::min(2 * m, max_order_)) {
        try {
            return evaluate(log_series(m), x, precision);
        } catch (const Error& err) {
            if (err.code() != ErrorCode::InsufficientOrder || m >= max_order_) throw;
        }
    }
}

IntegralPart nearest_integral(const KInfPoint& y, int degree_bound) {
    IntegralPart out;
    out.deviation = INT_MAX;
    for (const LaurentSeries& s : y) {
        const int q = s.q();
        if (s.precision() <= 0) fail(ErrorCode::InsufficientOrder, "integral part not known: " + s.to_string());
        std::vector<Coeff> c;
        int dev = s.precision();
        for (int e : s.support()) {
            if (e >= 0) {
                if (e > degree_bound)
                    fail(ErrorCode::DegreeExceeded, "polynomial part of degree " + std::to_string(e) +
                                                        " exceeds bound " + std::to_string(degree_bound));
                if (c.empty()) c.resize(static_cast<std::size_t>(e) + 1, 0);
                c[static_cast<std::size_t>(e)] = s.coeff(e);
            } else {
                dev = -e;
                break;
            }
        }
        out.poly.push_back(Poly(q, Var::Theta, c));
        out.deviation = std::min(out.deviation, dev);
    }
    return out;
}

}  // namespace tmot
