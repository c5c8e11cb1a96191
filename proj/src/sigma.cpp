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

#include "tmot/sigma.hpp"

#include <algorithm>
#include <numeric>

#include "tmot/error.hpp"

namespace tmot {

namespace {

BiPoly bconst(int q, const Poly& c) { return BiPoly::constant(q, c.with_var(Var::Theta)); }
BiPoly bzero(int q) { return BiPoly(q); }

BiPoly t_minus_theta(int q) {
    return BiPoly(q, {-Poly::monomial(q, Var::Theta, 1), Poly::constant(q, Var::Theta, 1)});
}

BiPoly det_of(const Matrix<BiPoly>& m, int q) {
    return bareiss_det(m, bconst(q, Poly::constant(q, Var::Theta, 1)),
                       [](const BiPoly& a, const BiPoly& b) { return a.exact_div(b); });
}

Poly lcm(const Poly& a, const Poly& b) { return (a * b).exact_div(gcd(a, b)).monic(); }

void check_rank(int r, int cap) {
    if (r > cap) fail(ErrorCode::RankOverflow, "rank " + std::to_string(r) + " exceeds the cap " + std::to_string(cap));
}

}  // namespace

SigmaModule SigmaModule::from_matrix(int q, Matrix<BiPoly> num, Poly g) {
    require_prime_field(q);
    const std::size_t r = num.size();
    if (r == 0) fail(ErrorCode::DimensionMismatch, "empty sigma matrix");
    for (const auto& row : num)
        if (row.size() != r) fail(ErrorCode::DimensionMismatch, "sigma matrix is not square");
    if (g.q() == 0 || g.is_zero()) g = Poly::constant(q, Var::Theta, 1);
    g = g.with_var(Var::Theta);
    // Make g monic; its leading coefficient goes into the numerator.
    const Coeff gl = g.lead();
    if (gl != 1) {
        const Coeff inv = inverse_mod_prime(gl, q);
        g = g.scaled(inv);
        for (auto& row : num)
            for (auto& x : row) x = x.scaled(Poly::constant(q, Var::Theta, inv));
    }
    // Drop factors of g that divide every numerator entry.
    for (;;) {
        Poly common = g;
        for (const auto& row : num)
            for (const auto& x : row)
                for (const Poly& c : x.coeffs()) common = gcd(common, c);
        if (common.is_constant()) break;
        g = g.exact_div(common);
        for (auto& row : num)
            for (auto& x : row) x = x.exact_div(bconst(q, common));
    }
    for (auto& row : num)
        for (auto& x : row)
            if (x.q() == 0) x = bzero(q);

    SigmaModule m;
    m.q_ = q;
    m.num_ = std::move(num);
    m.g_ = g;

    BiPoly d = det_of(m.num_, q);
    if (d.is_zero()) fail(ErrorCode::NotEffective, "sigma is degenerate (zero determinant)");
    BiPoly gr = bconst(q, g.pow(r));
    BiPoly red;
    try {
        red = d.exact_div(gr);
    } catch (const Error&) {
        fail(ErrorCode::NotEffective, "determinant " + ::tmot::to_string(d) + " is not a unit times a power of t-x");
    }
    const int n = red.degree();
    const Poly& lead = red.coeffs().back();
    if (!lead.is_constant() || lead.is_zero())
        fail(ErrorCode::NotEffective, "determinant " + ::tmot::to_string(d) + " is not a unit times a power of t-x");
    BiPoly expect = bconst(q, lead);
    BiPoly base = t_minus_theta(q);
    for (int i = 0; i < n; ++i) expect *= base;
    if (!(expect == red))
        fail(ErrorCode::NotEffective, "determinant " + ::tmot::to_string(d) + " is not a unit times a power of t-x");
    m.alpha_ = lead.lead();
    m.n_ = n;
    return m;
}

Matrix<KtPoly> SigmaModule::sigma() const {
    Matrix<KtPoly> out;
    const RationalFn ginv = RationalFn(g_).inverse();
    for (const auto& row : num_) {
        std::vector<KtPoly> r;
        for (const auto& x : row) r.push_back(to_kt(x).scaled(ginv));
        out.push_back(std::move(r));
    }
    return out;
}

std::string SigmaModule::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (i) s += ", ";
        s += "[";
        for (std::size_t j = 0; j < num_[i].size(); ++j) {
            if (j) s += ", ";
            s += ::tmot::to_string(num_[i][j]);
        }
        s += "]";
    }
    s += "]";
    if (!g_.is_one()) s += " / (" + g_.to_string() + ")";
    return s;
}

SigmaModule carlitz_power(int q, int n) {
    if (n < 0) fail(ErrorCode::NotEffective, "negative Carlitz power");
    BiPoly e = bconst(q, Poly::constant(q, Var::Theta, 1));
    BiPoly base = t_minus_theta(q);
    for (int i = 0; i < n; ++i) e *= base;
    return SigmaModule::from_matrix(q, {{e}});
}

SigmaModule trivial_module(int q) { return carlitz_power(q, 0); }

SigmaModule drinfeld_motive(int q, const std::vector<RationalFn>& a) {
    require_prime_field(q);
    const std::size_t r = a.size();
    if (r == 0) fail(ErrorCode::BadLeadingCoeff, "empty coefficient list");
    const RationalFn& ar = a.back();
    if (ar.is_zero() || !ar.is_polynomial() || !ar.num().is_constant())
        fail(ErrorCode::BadLeadingCoeff, "leading coefficient " + ar.to_string() + " is not in F_q^x");
    const Coeff ar_inv = inverse_mod_prime(ar.num().lead(), q);
    Poly g = Poly::constant(q, Var::Theta, 1);
    for (std::size_t i = 0; i + 1 < r; ++i) g = lcm(g, a[i].den());
    Matrix<BiPoly> num = filled(r, r, bzero(q));
    for (std::size_t j = 0; j + 1 < r; ++j) num[j + 1][j] = bconst(q, g);
    num[0][r - 1] = t_minus_theta(q).scaled(g.scaled(ar_inv));
    for (std::size_t i = 1; i < r; ++i) {
        const RationalFn& ai = a[i - 1];
        Poly c = (ai.num() * g.exact_div(ai.den())).scaled(-static_cast<long long>(ar_inv));
        num[i][r - 1] = num[i][r - 1] + bconst(q, c);
    }
    return SigmaModule::from_matrix(q, std::move(num), g);
}

SigmaModule tensor(const SigmaModule& a, const SigmaModule& b, int rank_cap) {
    if (a.q() != b.q()) fail(ErrorCode::DimensionMismatch, "tensor of modules over different fields");
    const int ra = a.rank(), rb = b.rank();
    check_rank(ra * rb, rank_cap);
    const int q = a.q();
    Matrix<BiPoly> num = filled(static_cast<std::size_t>(ra * rb), static_cast<std::size_t>(ra * rb), bzero(q));
    for (int i = 0; i < ra; ++i)
        for (int k = 0; k < rb; ++k)
            for (int j = 0; j < ra; ++j)
                for (int l = 0; l < rb; ++l)
                    num[static_cast<std::size_t>(i * rb + k)][static_cast<std::size_t>(j * rb + l)] =
                        a.numerator()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                        b.numerator()[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
    return SigmaModule::from_matrix(q, std::move(num), a.denominator() * b.denominator());
}

SigmaModule sym2(const SigmaModule& m, int rank_cap) {
    const int r = m.rank();
    const int q = m.q();
    check_rank(r * (r + 1) / 2, rank_cap);
    std::vector<std::pair<int, int>> basis;
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) basis.emplace_back(i, j);
    const auto& s = m.numerator();
    auto at = [&](int i, int j) -> const BiPoly& { return s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
    Matrix<BiPoly> num = filled(basis.size(), basis.size(), bzero(q));
    for (std::size_t col = 0; col < basis.size(); ++col) {
        auto [i, j] = basis[col];
        for (std::size_t row = 0; row < basis.size(); ++row) {
            auto [k, l] = basis[row];
            BiPoly c = at(k, i) * at(l, j);
            if (k != l) c += at(l, i) * at(k, j);
            num[row][col] = c;
        }
    }
    return SigmaModule::from_matrix(q, std::move(num), m.denominator() * m.denominator());
}

SigmaModule det_module(const SigmaModule& m) {
    const int q = m.q();
    BiPoly e = bconst(q, Poly::constant(q, Var::Theta, m.alpha()));
    BiPoly base = t_minus_theta(q);
    for (int i = 0; i < m.n(); ++i) e *= base;
    return SigmaModule::from_matrix(q, {{e}});
}

SigmaModule dual_twist(const SigmaModule& m) {
    const int q = m.q();
    const BiPoly one = bconst(q, Poly::constant(q, Var::Theta, 1));
    Matrix<BiPoly> adj = adjugate(m.numerator(), one, [q](const Matrix<BiPoly>& x) { return det_of(x, q); });
    Matrix<BiPoly> num = transpose(adj);
    const Poly ainv = Poly::constant(q, Var::Theta, inverse_mod_prime(m.alpha(), q));
    for (auto& row : num)
        for (auto& x : row) x = x.scaled(ainv);
    return SigmaModule::from_matrix(q, std::move(num), m.denominator().pow(static_cast<unsigned>(m.rank() - 1)));
}

SigmaModule direct_sum(const SigmaModule& a, const SigmaModule& b, int rank_cap) {
    const int q = a.q();
    const int ra = a.rank(), rb = b.rank();
    check_rank(ra + rb, rank_cap);
    Matrix<BiPoly> num = filled(static_cast<std::size_t>(ra + rb), static_cast<std::size_t>(ra + rb), bzero(q));
    const BiPoly ga = bconst(q, a.denominator()), gb = bconst(q, b.denominator());
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < ra; ++j)
            num[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                a.numerator()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * gb;
    for (int i = 0; i < rb; ++i)
        for (int j = 0; j < rb; ++j)
            num[static_cast<std::size_t>(ra + i)][static_cast<std::size_t>(ra + j)] =
                b.numerator()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * ga;
    return SigmaModule::from_matrix(q, std::move(num), a.denominator() * b.denominator());
}

SigmaModule change_basis(const SigmaModule& m, const Matrix<BiPoly>& u, const Matrix<BiPoly>& u_inv) {
    const int q = m.q();
    const BiPoly zero = bzero(q);
    Matrix<BiPoly> uinv_q = u_inv;
    for (auto& row : uinv_q)
        for (auto& x : row) x = x.frobenius(1);
    Matrix<BiPoly> num = multiply(multiply(u, m.numerator(), zero), uinv_q, zero);
    return SigmaModule::from_matrix(q, std::move(num), m.denominator());
}

std::string EulerFactor::to_string() const {
    std::string s;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        const Poly& c = coeffs[j];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        std::string term;
        if (j == 0) {
            term = cs;
        } else {
            std::string xp = j == 1 ? "X" : "X^" + std::to_string(j);
            if (c.is_one())
                term = xp;
            else if (c.weight() > 1)
                term = "(" + cs + ")*" + xp;
            else
                term = cs + "*" + xp;
        }
        if (!s.empty()) s += " + ";
        s += term;
    }
    return s.empty() ? "0" : s;
}

Fraction make_fraction(long long num, long long den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    return Fraction{num / g, den / g};
}

std::string Fraction::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::vector<Fraction> factor_slopes(const EulerFactor& f) {
    // Lower convex hull of (j, -deg c_j).
    std::vector<std::pair<long long, long long>> pts;
    for (std::size_t j = 0; j < f.coeffs.size(); ++j)
        if (!f.coeffs[j].is_zero()) pts.emplace_back(static_cast<long long>(j), -static_cast<long long>(f.coeffs[j].degree()));
    std::vector<std::pair<long long, long long>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // Drop b if it lies on or above segment a-p.
            if ((b.second - a.second) * (p.first - a.first) >= (p.second - a.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::vector<Fraction> slopes;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        const long long dx = hull[i].first - hull[i - 1].first;
        const long long dy = hull[i].second - hull[i - 1].second;
        Fraction s = make_fraction(dy, dx * f.place.d);
        for (long long k = 0; k < dx; ++k) slopes.push_back(s);
    }
    return slopes;
}

std::vector<Fraction> slopes_of(const SigmaModule& m) {
    std::vector<Fraction> best;
    for (int d = 1; d <= 2; ++d) {
        for (const Place& p : monic_irreducibles(m.q(), d)) {
            if (!m.good_at(p)) continue;
            std::vector<Fraction> s = factor_slopes(euler_factor(m, p));
            std::sort(s.begin(), s.end());
            if (best.empty()) {
                best = s;
                continue;
            }
            auto mag = [](const Fraction& f) { return make_fraction(f.num < 0 ? -f.num : f.num, f.den); };
            for (std::size_t i = 0; i < s.size() && i < best.size(); ++i)
                if (mag(best[i]) < mag(s[i])) best[i] = s[i];
        }
    }
    std::sort(best.begin(), best.end());
    return best;
}

std::vector<Fraction> newton_slopes(const SigmaModule& m) {
    std::vector<Fraction> s = slopes_of(m);
    for (const Fraction& f : s)
        if (f.num >= 0)
            fail(ErrorCode::NotFinitelyGenerated, "Newton slope " + f.to_string() + " is not negative");
    return s;
}

Fraction max_slope_magnitude(const std::vector<Fraction>& slopes) {
    Fraction best{0, 1};
    for (const Fraction& f : slopes) {
        Fraction mag = make_fraction(f.num < 0 ? -f.num : f.num, f.den);
        if (best < mag) best = mag;
    }
    return best;
}

}  // namespace tmot
