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

#include "tmot/bridge.hpp"

#include <algorithm>

#include "tmot/error.hpp"

namespace tmot {

SkewPoly::SkewPoly(int q, std::vector<RationalFn> c) : q_(q), c_(std::move(c)) { normalize(); }

void SkewPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    std::vector<RationalFn> c(std::max(a.c_.size(), b.c_.size()), RationalFn::constant(a.q_, 0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return SkewPoly(a.q_, std::move(c));
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) {
    std::vector<RationalFn> c(std::max(a.c_.size(), b.c_.size()), RationalFn::constant(a.q_, 0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return SkewPoly(a.q_, std::move(c));
}

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
    if (a.is_zero() || b.is_zero()) return SkewPoly(a.q_, {});
    std::vector<RationalFn> c(a.c_.size() + b.c_.size() - 1, RationalFn::constant(a.q_, 0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j].frobenius(static_cast<int>(i));
    }
    return SkewPoly(a.q_, std::move(c));
}

std::string SkewPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string term;
        const std::string cs = c_[i].to_string();
        if (i == 0) {
            term = cs;
        } else {
            const std::string tau = i == 1 ? "tau" : "tau^" + std::to_string(i);
            term = c_[i].is_one() ? tau : "(" + cs + ")*" + tau;
        }
        s += (s.empty() ? "" : " + ") + term;
    }
    return s;
}

namespace {

using KtMatrix = Matrix<KtPoly>;

KtPoly kt_one(int q) { return KtPoly::constant(q, RationalFn::constant(q, 1)); }

KtMatrix frobenius(const KtMatrix& a, int s) {
    KtMatrix r = a;
    for (auto& row : r)
        for (auto& x : row) x = x.frobenius(s);
    return r;
}

MotiveVector act(const KtMatrix& a, const MotiveVector& z) {
    MotiveVector r(a.size(), KtPoly(z.empty() ? 2 : z[0].q()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < z.size(); ++j)
            if (!a[i][j].is_zero() && !z[j].is_zero()) r[i] += a[i][j] * z[j];
    return r;
}

bool all_zero(const MotiveVector& z) {
    return std::all_of(z.begin(), z.end(), [](const KtPoly& x) { return x.is_zero(); });
}

int max_degree(const MotiveVector& z) {
    int d = kDegNegInf;
    for (const KtPoly& x : z) d = std::max(d, x.degree());
    return d;
}

RationalFn theta_pow(int q, int s) {
    Poly th = Poly::monomial(q, Var::Theta, 1);
    return RationalFn(th.frobenius(s));
}

class Reducer {
   public:
    Reducer(const SigmaModule& m, int cap) : q_(m.q()), r_(static_cast<std::size_t>(m.rank())), n_(m.n()), cap_(cap) {
        sigma_ = m.sigma();
        const KtPoly one = kt_one(q_);
        auto det = [&](const KtMatrix& a) {
            return bareiss_det(a, one, [](const KtPoly& x, const KtPoly& y) { return x.exact_div(y); });
        };
        adj_ = adjugate(sigma_, one, det);
        alpha_ = m.alpha();
        choose_basis();
    }

    const std::vector<MotiveVector>& basis() const { return basis_; }

    /// c[j][s]: coefficient of tau^s m_j.
    std::vector<std::vector<RationalFn>> decompose(const MotiveVector& z, int& levels) {
        const std::size_t d = basis_.size();
        std::vector<std::vector<RationalFn>> c(d);
        MotiveVector zs = z;
        for (int s = 0; !all_zero(zs); ++s) {
            if (s > cap_) fail(ErrorCode::DegreeCapExceeded, "reduction exceeded " + std::to_string(cap_) + " levels");
            std::vector<RationalFn> psi = project(zs, s);
            const KMatrix& linv = left_inverse(s);
            MotiveVector w = zs;
            for (std::size_t j = 0; j < d; ++j) {
                RationalFn cj = RationalFn::constant(q_, 0);
                for (std::size_t k = 0; k < d; ++k) cj += linv[j][k] * psi[rows_[k]];
                c[j].push_back(cj);
                if (cj.is_zero()) continue;
                for (std::size_t l = 0; l < r_; ++l) w[l] -= basis_[j][l].scaled(cj);
            }
            MotiveVector next = act(adj(s), w);
            const KtPoly dt = det(s);
            for (auto& x : next) x = x.exact_div(dt);
            zs = std::move(next);
            if (max_degree(zs) > cap_)
                fail(ErrorCode::DegreeCapExceeded, "t-degree exceeded " + std::to_string(cap_) + " during reduction");
            levels = std::max(levels, s + 1);
        }
        for (auto& row : c) row.resize(static_cast<std::size_t>(std::max<int>(levels, 1)), RationalFn::constant(q_, 0));
        return c;
    }

    MotiveVector reconstruct(const std::vector<std::vector<RationalFn>>& c) {
        MotiveVector out(r_, KtPoly(q_));
        for (std::size_t j = 0; j < c.size(); ++j)
            for (std::size_t s = 0; s < c[j].size(); ++s) {
                if (c[j][s].is_zero()) continue;
                MotiveVector v = act(sigma_power(static_cast<int>(s)), basis_[j]);
                for (std::size_t l = 0; l < r_; ++l) out[l] += v[l].scaled(c[j][s]);
            }
        return out;
    }

   private:
    const KtMatrix& adj(int s) {
        while (static_cast<int>(adj_cache_.size()) <= s) adj_cache_.push_back(frobenius(adj_, static_cast<int>(adj_cache_.size())));
        return adj_cache_[static_cast<std::size_t>(s)];
    }

    KtPoly modulus(int s) const {
        KtPoly lin(q_, {-theta_pow(q_, s), RationalFn::constant(q_, 1)});
        KtPoly p = kt_one(q_);
        for (int i = 0; i < n_; ++i) p *= lin;
        return p;
    }

    const KtPoly& det(int s) {
        while (static_cast<int>(det_cache_.size()) <= s)
            det_cache_.push_back(modulus(static_cast<int>(det_cache_.size())).scaled(RationalFn::constant(q_, alpha_)));
        return det_cache_[static_cast<std::size_t>(s)];
    }

    const KMatrix& left_inverse(int s) {
        while (static_cast<int>(linv_cache_.size()) <= s)
            linv_cache_.push_back(tmot::frobenius(linv_, static_cast<int>(linv_cache_.size())));
        return linv_cache_[static_cast<std::size_t>(s)];
    }

    const KtMatrix& sigma_power(int s) {
        if (pow_cache_.empty()) {
            KtMatrix id = filled(r_, r_, KtPoly(q_));
            for (std::size_t i = 0; i < r_; ++i) id[i][i] = kt_one(q_);
            pow_cache_.push_back(id);
        }
        while (static_cast<int>(pow_cache_.size()) <= s) {
            const int k = static_cast<int>(pow_cache_.size()) - 1;
            pow_cache_.push_back(multiply(pow_cache_.back(), frobenius(sigma_, k), KtPoly(q_)));
        }
        return pow_cache_[static_cast<std::size_t>(s)];
    }

    std::vector<RationalFn> project(const MotiveVector& z, int s) {
        MotiveVector v = act(adj(s), z);
        const KtPoly mod = modulus(s);
        std::vector<RationalFn> out;
        for (const KtPoly& x : v) {
            KtPoly red = x.mod(mod);
            for (int k = 0; k < n_; ++k) out.push_back(red.coeff(k));
        }
        return out;
    }

    void choose_basis() {
        KMatrix cols;  // one row per chosen lift: psi_0(m_j)
        for (int k = 0; k < n_ && static_cast<int>(basis_.size()) < n_; ++k)
            for (std::size_t l = 0; l < r_ && static_cast<int>(basis_.size()) < n_; ++l) {
                MotiveVector m(r_, KtPoly(q_));
                m[l] = KtPoly::t_power(q_, k);
                KMatrix trial = cols;
                trial.push_back(project(m, 0));
                if (rank(trial) == trial.size()) {
                    cols = std::move(trial);
                    basis_.push_back(std::move(m));
                }
            }
        if (static_cast<int>(basis_.size()) != n_)
            fail(ErrorCode::Mismatch, "cokernel of sigma has dimension " + std::to_string(basis_.size()) +
                                          ", expected " + std::to_string(n_));
        // Rows of psi_0 on which the chosen columns are independent.
        KMatrix work = cols;
        std::vector<std::size_t> piv = rref(work);
        rows_ = piv;
        KMatrix sub = zero_matrix(q_, rows_.size(), cols.size());
        for (std::size_t a = 0; a < rows_.size(); ++a)
            for (std::size_t j = 0; j < cols.size(); ++j) sub[a][j] = cols[j][rows_[a]];
        linv_ = inverse(sub);
    }

    int q_;
    std::size_t r_;
    int n_;
    int cap_;
    Coeff alpha_ = 1;
    KtMatrix sigma_, adj_;
    std::vector<MotiveVector> basis_;
    std::vector<std::size_t> rows_;
    KMatrix linv_;
    std::vector<KtMatrix> adj_cache_, pow_cache_;
    std::vector<KtPoly> det_cache_;
    std::vector<KMatrix> linv_cache_;
};

// Linear algebra over F_q[theta]/(p).
std::vector<Poly> residue_kernel_vector(const Matrix<Poly>& w, const Poly& p) {
    // Solve lambda^T w = 0, i.e. w^T lambda = 0.
    const std::size_t k = w.size(), d = w[0].size();
    Matrix<Poly> a(d, std::vector<Poly>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < d; ++j) a[j][i] = w[i][j] % p;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < d; ++c) {
        std::size_t s = r;
        while (s < d && a[s][c].is_zero()) ++s;
        if (s == d) continue;
        std::swap(a[s], a[r]);
        const Poly inv = poly_inv_mod(a[r][c], p);
        for (auto& x : a[r]) x = (x * inv) % p;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Poly f = a[i][c];
            for (std::size_t j = c; j < k; ++j) a[i][j] = (a[i][j] - f * a[r][j]) % p;
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(k, false);
    for (std::size_t c : piv) is_piv[c] = true;
    for (std::size_t f = 0; f < k; ++f) {
        if (is_piv[f]) continue;
        std::vector<Poly> lambda(k, Poly(p.q(), Var::Theta));
        lambda[f] = Poly::constant(p.q(), Var::Theta, 1);
        for (std::size_t i = 0; i < piv.size(); ++i) lambda[piv[i]] = -a[i][f];
        return lambda;
    }
    return {};
}

Poly minor_gcd(const Matrix<Poly>& w) {
    const std::size_t k = w.size(), d = w[0].size();
    const int q = w[0][0].q();
    Poly g(q, Var::Theta);
    std::vector<bool> pick(d, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
        Matrix<Poly> sub(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (pick[j]) sub[i].push_back(w[i][j]);
        g = gcd(g, leibniz_det(sub, Poly::constant(q, Var::Theta, 1)));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return g;
}

Poly irreducible_factor(const Poly& f) {
    if (is_irreducible(f)) return f.monic();
    for (int e = 1; e < f.degree(); ++e)
        for (const Place& p : monic_irreducibles(f.q(), e))
            if ((f % p.v).is_zero()) return p.v;
    return f.monic();
}

}  // namespace

WMap w_map(const TModule& e) {
    const int q = e.q();
    KMatrix kern = left_kernel(e.nilpotent());
    WMap out;
    out.dim = static_cast<int>(kern.size());
    if (kern.empty()) return out;
    Matrix<Poly> w;
    for (const auto& row : kern) {
        Poly l = Poly::constant(q, Var::Theta, 1);
        for (const RationalFn& x : row) l = (l * x.den()).exact_div(gcd(l, x.den()));
        std::vector<Poly> r;
        Poly content(q, Var::Theta);
        for (const RationalFn& x : row) {
            r.push_back((RationalFn(l) * x).num());
            content = gcd(content, r.back());
        }
        for (auto& x : r) x = x.exact_div(content);
        w.push_back(std::move(r));
    }
    for (Poly g = minor_gcd(w); g.degree() > 0; g = minor_gcd(w)) {
        const Poly p = irreducible_factor(g);
        std::vector<Poly> lambda = residue_kernel_vector(w, p);
        if (lambda.empty()) fail(ErrorCode::Mismatch, "saturation step found no relation");
        std::size_t pivot = 0;
        while (!lambda[pivot].is_one()) ++pivot;
        std::vector<Poly> row(w[0].size(), Poly(q, Var::Theta));
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j < row.size(); ++j) row[j] += lambda[i] * w[i][j];
        for (auto& x : row) x = x.exact_div(p);
        w[pivot] = std::move(row);
    }
    for (const auto& row : w) {
        std::vector<RationalFn> r;
        for (const Poly& x : row) r.emplace_back(x);
        out.w.push_back(std::move(r));
    }
    return out;
}

EulerFactor module_euler_factor(const TModule& e, const Place& p) {
    if (p.d != 1) throw std::invalid_argument("module_euler_factor handles places of degree one");
    const int q = e.q();
    PrimeField f(q);
    const Coeff a = f.neg(p.v.coeff(0));
    const std::size_t d = static_cast<std::size_t>(e.dim());
    // Entries of t I - sum A_k X^k as polynomials in t over F_q[X], X written as theta.
    Matrix<BiPoly> m = filled(d, d, BiPoly(q));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<Coeff> xs;
            for (int k = 0; k <= e.degree(); ++k) {
                const RationalFn& c = e.coeff(k)[i][j];
                Coeff v = 0;
                if (!c.is_zero()) {
                    const Coeff den = c.den().eval(a);
                    if (den == 0) fail(ErrorCode::BadReduction, "t-module not integral at " + p.v.to_string());
                    v = f.mul(c.num().eval(a), f.inv(den));
                }
                xs.push_back(f.neg(v));
            }
            std::vector<Poly> tc{Poly(q, Var::Theta, xs)};
            if (i == j) tc.push_back(Poly::constant(q, Var::Theta, 1));
            m[i][j] = BiPoly(q, tc);
        }
    const BiPoly chi = leibniz_det(m, BiPoly::constant(q, Poly::constant(q, Var::Theta, 1)));
    int rx = 0;
    for (const Poly& c : chi.coeffs()) rx = std::max(rx, c.degree());
    std::vector<Poly> by_x(static_cast<std::size_t>(rx) + 1, Poly(q, Var::T));
    for (int k = 0; k <= chi.degree(); ++k) {
        const Poly& c = chi.coeffs()[static_cast<std::size_t>(k)];
        for (int j = 0; j <= c.degree(); ++j)
            if (c.coeff(j) != 0) by_x[static_cast<std::size_t>(j)] += Poly::monomial(q, Var::T, k, c.coeff(j));
    }
    const Poly& top = by_x.back();
    if (top.degree() != 0) fail(ErrorCode::DescentFailure, "leading X-coefficient is not a constant");
    const long long inv = f.inv(top.coeff(0));
    EulerFactor out{p, {}};
    for (int j = 0; j <= rx; ++j) out.coeffs.push_back(by_x[static_cast<std::size_t>(rx - j)].scaled(inv));
    return out;
}

BridgeResult motive_to_module(const SigmaModule& m, int degree_cap) {
    newton_slopes(m);
    const int q = m.q();
    Reducer red(m, degree_cap);
    const auto& basis = red.basis();
    const std::size_t d = basis.size();
    const std::size_t r = static_cast<std::size_t>(m.rank());

    int levels = 0;
    std::vector<std::vector<std::vector<RationalFn>>> rel;
    bool integral = m.denominator().is_one();
    for (std::size_t j = 0; j < d; ++j) {
        MotiveVector tm = basis[j];
        for (auto& x : tm) x = x.shifted(1);
        rel.push_back(red.decompose(tm, levels));
        if (!(red.reconstruct(rel.back()) == tm))
            fail(ErrorCode::Mismatch, "reduction of t m_" + std::to_string(j + 1) + " does not reconstruct");
        for (const auto& row : rel.back())
            for (const RationalFn& c : row) integral = integral && c.is_polynomial();
    }
    for (std::size_t l = 0; l < r; ++l) {
        MotiveVector e(r, KtPoly(q));
        e[l] = kt_one(q);
        int lv = 0;
        if (!(red.reconstruct(red.decompose(e, lv)) == e))
            fail(ErrorCode::Mismatch, "basis vector " + std::to_string(l + 1) + " is not generated");
    }

    std::vector<KMatrix> a(static_cast<std::size_t>(std::max(levels, 2)), zero_matrix(q, d, d));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < rel[j][i].size(); ++k) a[k][j][i] = rel[j][i][k];
    BridgeResult out{TModule(q, std::move(a)), basis, {}, integral, levels, 0};
    out.w = w_map(out.module);

    for (const Place& p : monic_irreducibles(q, 1)) {
        if (!m.good_at(p)) continue;
        EulerFactor fe;
        try {
            fe = module_euler_factor(out.module, p);
        } catch (const Error& err) {
            if (err.code() == ErrorCode::BadReduction) continue;
            throw;
        }
        if (!(fe.coeffs == euler_factor(m, p).coeffs))
            fail(ErrorCode::Mismatch, "Euler factors of M and E disagree at " + p.v.to_string());
        ++out.checked_places;
    }
    return out;
}

}  // namespace tmot
