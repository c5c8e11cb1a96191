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

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <cstdint>
#include <vector>

#include "gf2x.hpp"
#include "tmot/error.hpp"
#include "tmot/sigma.hpp"

namespace tmot {

namespace {

// k(v) = F_2[x]/(v) packed in one word. Products of degree < 2d are
// reduced with a precomputed Barrett quotient when d <= 31.
class Gf2Field {
   public:
    using E = std::uint64_t;

    explicit Gf2Field(const Poly& v) : d_(v.degree()) {
        v_ = gf2x::pack(v.coeffs())[0];
        if (d_ <= 31) {
            // mu = floor(x^(2d) / v)
            gf2x::Words num(1, std::uint64_t{1} << (2 * d_)), quo;
            gf2x::reduce(num, {v_}, &quo);
            mu_ = quo.empty() ? 0 : quo[0];
        }
    }

    E zero() const { return 0; }
    E one() const { return 1; }
    E add(E a, E b) const { return a ^ b; }
    E sub(E a, E b) const { return a ^ b; }
    E neg(E a) const { return a; }
    bool is_zero(E a) const { return a == 0; }
    bool is_one(E a) const { return a == 1; }
    E mul(E a, E b) const {
        if (d_ <= 31) {
            const std::uint64_t p = gf2x::clmul_lo(a, b);
            const std::uint64_t qt = gf2x::clmul_lo(p >> d_, mu_) >> d_;
            return (p ^ gf2x::clmul_lo(qt, v_)) & ((std::uint64_t{1} << d_) - 1);
        }
        return gf2x::mulmod64(a, b, v_, d_);
    }
    E inv(E a) const { return gf2x::invmod64(a, v_); }
    E frob(E a) const { return mul(a, a); }
    E from_coeff(Coeff c) const { return c & 1; }
    bool to_coeff(E a, Coeff& c) const {
        if (a > 1) return false;
        c = static_cast<Coeff>(a);
        return true;
    }
    E theta() const { return d_ == 1 ? (2 ^ v_) : 2; }

   private:
    int d_;
    std::uint64_t v_ = 0;
    std::uint64_t mu_ = 0;
};

constexpr int kMaxDigits = 48;

// k(v) for odd q (or large d over F_2): little-endian digit arrays.
class DigitField {
   public:
    struct E {
        std::array<std::uint8_t, kMaxDigits> c{};
    };

    explicit DigitField(const Poly& v) : q_(v.q()), d_(v.degree()), f_(v.q()) {
        for (int i = 0; i < d_; ++i) v_[static_cast<std::size_t>(i)] = v.coeff(i);
    }

    E zero() const { return E{}; }
    E one() const {
        E r{};
        r.c[0] = 1;
        return r;
    }
    E add(const E& a, const E& b) const {
        E r;
        for (int i = 0; i < d_; ++i) r.c[i] = f_.add(a.c[i], b.c[i]);
        return r;
    }
    E sub(const E& a, const E& b) const {
        E r;
        for (int i = 0; i < d_; ++i) r.c[i] = f_.sub(a.c[i], b.c[i]);
        return r;
    }
    E neg(const E& a) const {
        E r;
        for (int i = 0; i < d_; ++i) r.c[i] = f_.neg(a.c[i]);
        return r;
    }
    bool is_zero(const E& a) const {
        for (int i = 0; i < d_; ++i)
            if (a.c[i] != 0) return false;
        return true;
    }
    bool is_one(const E& a) const {
        if (a.c[0] != 1) return false;
        for (int i = 1; i < d_; ++i)
            if (a.c[i] != 0) return false;
        return true;
    }
    E mul(const E& a, const E& b) const {
        std::array<int, 2 * kMaxDigits> acc{};
        for (int i = 0; i < d_; ++i) {
            if (a.c[i] == 0) continue;
            const int ai = a.c[i];
            for (int j = 0; j < d_; ++j) acc[i + j] += ai * b.c[j];
        }
        for (int k = 2 * d_ - 2; k >= d_; --k) {
            const int c = acc[k] % q_;
            if (c == 0) continue;
            for (int j = 0; j < d_; ++j) acc[k - d_ + j] -= c * v_[j];
        }
        E r;
        for (int i = 0; i < d_; ++i) {
            int x = acc[i] % q_;
            r.c[i] = static_cast<std::uint8_t>(x < 0 ? x + q_ : x);
        }
        return r;
    }
    E inv(const E& a) const {
        std::vector<Coeff> c(a.c.begin(), a.c.begin() + d_);
        std::vector<Coeff> vc(v_.begin(), v_.begin() + d_);
        vc.push_back(1);
        Poly r = poly_inv_mod(Poly(q_, Var::Theta, c), Poly(q_, Var::Theta, vc));
        E out{};
        for (int i = 0; i <= r.degree(); ++i) out.c[i] = r.coeff(i);
        return out;
    }
    E frob(const E& a) const {
        E r = one(), b = a;
        for (int e = q_; e != 0; e >>= 1) {
            if (e & 1) r = mul(r, b);
            if (e > 1) b = mul(b, b);
        }
        return r;
    }
    E from_coeff(Coeff c) const {
        E r{};
        r.c[0] = static_cast<std::uint8_t>(c % q_);
        return r;
    }
    bool to_coeff(const E& a, Coeff& c) const {
        for (int i = 1; i < d_; ++i)
            if (a.c[i] != 0) return false;
        c = a.c[0];
        return true;
    }
    E theta() const {
        E r{};
        if (d_ == 1)
            r.c[0] = f_.neg(static_cast<Coeff>(v_[0]));
        else
            r.c[1] = 1;
        return r;
    }

   private:
    int q_;
    int d_;
    PrimeField f_;
    std::array<int, kMaxDigits> v_{};
};

// Polynomials in t over k(v), little-endian.
template <class F>
struct Kernel {
    using E = typename F::E;
    using P = std::vector<E>;
    const F& f;

    void trim(P& a) const {
        while (!a.empty() && f.is_zero(a.back())) a.pop_back();
    }
    P add(const P& a, const P& b) const {
        P r = a.size() >= b.size() ? a : b;
        const P& s = a.size() >= b.size() ? b : a;
        for (std::size_t i = 0; i < s.size(); ++i) r[i] = f.add(a[i], b[i]);
        trim(r);
        return r;
    }
    P neg(const P& a) const {
        P r = a;
        for (auto& x : r) x = f.neg(x);
        return r;
    }
    P sub(const P& a, const P& b) const { return add(a, neg(b)); }
    P mul(const P& a, const P& b) const {
        if (a.empty() || b.empty()) return {};
        if (b.size() == 1 && f.is_one(b[0])) return a;
        if (a.size() == 1 && f.is_one(a[0])) return b;
        P r(a.size() + b.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (f.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (f.is_zero(b[j])) continue;
                r[i + j] = f.add(r[i + j], f.is_one(b[j]) ? a[i] : f.mul(a[i], b[j]));
            }
        }
        trim(r);
        return r;
    }
    // Exact division; the divisor is nonzero.
    P div(const P& a, const P& b) const {
        if (a.empty()) return {};
        P rem = a;
        const std::size_t db = b.size() - 1;
        if (rem.size() <= db) fail(ErrorCode::Mismatch, "inexact division over k(v)[t]");
        P quo(rem.size() - db, f.zero());
        const E inv = f.inv(b.back());
        for (std::size_t i = rem.size(); i-- > db;) {
            if (f.is_zero(rem[i])) continue;
            E k = f.mul(rem[i], inv);
            quo[i - db] = k;
            for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(k, b[j]));
        }
        trim(rem);
        if (!rem.empty()) fail(ErrorCode::Mismatch, "inexact division over k(v)[t]");
        trim(quo);
        return quo;
    }
    P det(std::vector<std::vector<P>> a) const {
        const std::size_t n = a.size();
        if (n == 0) return P{f.one()};
        bool negate = false;
        P prev{f.one()};
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a[k][k].empty()) {
                std::size_t p = k + 1;
                while (p < n && a[p][k].empty()) ++p;
                if (p == n) return {};
                std::swap(a[k], a[p]);
                negate = !negate;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    a[i][j] = div(sub(mul(a[i][j], a[k][k]), mul(a[i][k], a[k][j])), prev);
            prev = a[k][k];
        }
        return negate ? neg(a[n - 1][n - 1]) : a[n - 1][n - 1];
    }
    E eval_theta(const Poly& c, const E& th) const {
        E acc = f.zero();
        for (int i = c.degree(); i >= 0; --i) acc = f.add(f.mul(acc, th), f.from_coeff(c.coeff(i)));
        return acc;
    }

    EulerFactor run(const SigmaModule& m, const Place& p) const {
        const int r = m.rank();
        const int d = p.d;
        const auto& num = m.numerator();
        const bool has_den = !m.denominator().is_one();
        E th = f.theta();
        std::vector<std::vector<P>> b;
        for (int i = 0; i < d; ++i) {
            if (i > 0) th = f.frob(th);
            std::vector<std::vector<P>> s(static_cast<std::size_t>(r), std::vector<P>(static_cast<std::size_t>(r)));
            E ginv = f.one();
            if (has_den) {
                E gv = eval_theta(m.denominator(), th);
                if (f.is_zero(gv)) fail(ErrorCode::BadReduction, "bad reduction at " + p.v.to_string());
                ginv = f.inv(gv);
            }
            for (int a = 0; a < r; ++a)
                for (int c = 0; c < r; ++c) {
                    const BiPoly& x = num[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
                    P e(x.coeffs().size(), f.zero());
                    for (std::size_t k = 0; k < e.size(); ++k) {
                        e[k] = eval_theta(x.coeffs()[k], th);
                        if (has_den) e[k] = f.mul(e[k], ginv);
                    }
                    trim(e);
                    s[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = std::move(e);
                }
            if (i == 0) {
                b = std::move(s);
                continue;
            }
            std::vector<std::vector<P>> nb(static_cast<std::size_t>(r), std::vector<P>(static_cast<std::size_t>(r)));
            for (int a = 0; a < r; ++a)
                for (int c = 0; c < r; ++c) {
                    P acc;
                    for (int k = 0; k < r; ++k) {
                        const P& y = s[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
                        if (y.empty()) continue;
                        acc = add(acc, mul(b[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)], y));
                    }
                    nb[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = std::move(acc);
                }
            b = std::move(nb);
        }
        // det(1 - X B) = sum_j (-1)^j e_j(B) X^j with e_j the sum of principal j-minors.
        EulerFactor out;
        out.place = p;
        out.coeffs.push_back(Poly::constant(m.q(), Var::T, 1));
        PrimeField pf(m.q());
        for (int j = 1; j <= r; ++j) {
            P sum;
            for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
                if (std::popcount(mask) != j) continue;
                std::vector<int> idx;
                for (int i = 0; i < r; ++i)
                    if (mask & (1u << i)) idx.push_back(i);
                std::vector<std::vector<P>> minor;
                for (int a : idx) {
                    std::vector<P> row;
                    for (int c : idx) row.push_back(b[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]);
                    minor.push_back(std::move(row));
                }
                sum = add(sum, det(std::move(minor)));
            }
            if (j % 2 == 1) sum = neg(sum);
            std::vector<Coeff> coeffs(sum.size(), 0);
            for (std::size_t k = 0; k < sum.size(); ++k)
                if (!f.to_coeff(sum[k], coeffs[k]))
                    fail(ErrorCode::DescentFailure, "Euler factor coefficient outside F_q[t] at " + p.v.to_string());
            out.coeffs.emplace_back(m.q(), Var::T, std::move(coeffs));
        }
        return out;
    }
};

}  // namespace

EulerFactor euler_factor(const SigmaModule& m, const Place& p) {
    if (!m.good_at(p)) fail(ErrorCode::BadReduction, "bad reduction at " + p.v.to_string());
    if (m.q() == 2 && p.d <= 63) {
        Gf2Field f(p.v);
        return Kernel<Gf2Field>{f}.run(m, p);
    }
    if (p.d <= kMaxDigits) {
        DigitField f(p.v);
        return Kernel<DigitField>{f}.run(m, p);
    }
    return euler_factor_reference(m, p);
}

EulerFactor euler_factor_reference(const SigmaModule& m, const Place& p) {
    // Reduce Sigma mod v, then twist the reduced residues by repeated q-th
    // powers; the characteristic polynomial comes from a cofactor expansion
    // of det(1 - X B) over k(v)[t][X].
    if (!m.good_at(p)) fail(ErrorCode::BadReduction, "bad reduction at " + p.v.to_string());
    const int q = m.q();
    const int r = m.rank();
    const Poly& v = p.v;
    using KP = std::vector<Poly>;  // polynomial in t over k(v)
    auto trim = [](KP& a) {
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    };
    auto add = [&](const KP& a, const KP& b) {
        KP out(std::max(a.size(), b.size()), Poly(q, Var::Theta));
        for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
        trim(out);
        return out;
    };
    auto mul = [&](const KP& a, const KP& b) {
        KP out;
        if (a.empty() || b.empty()) return out;
        out.assign(a.size() + b.size() - 1, Poly(q, Var::Theta));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % v;
        trim(out);
        return out;
    };
    const Poly ginv = poly_inv_mod(m.denominator() % v, v);
    Matrix<KP> sbar(static_cast<std::size_t>(r), std::vector<KP>(static_cast<std::size_t>(r)));
    for (int a = 0; a < r; ++a)
        for (int c = 0; c < r; ++c) {
            KP e;
            for (const Poly& x : m.numerator()[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)].coeffs())
                e.push_back((x * ginv) % v);
            trim(e);
            sbar[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = e;
        }
    Matrix<KP> b = sbar;
    Matrix<KP> cur = sbar;
    for (int i = 1; i < p.d; ++i) {
        for (auto& row : cur)
            for (auto& e : row)
                for (auto& x : e) x = pow_mod(x, static_cast<unsigned long long>(q), v);
        Matrix<KP> nb(static_cast<std::size_t>(r), std::vector<KP>(static_cast<std::size_t>(r)));
        for (int a = 0; a < r; ++a)
            for (int c = 0; c < r; ++c)
                for (int k = 0; k < r; ++k)
                    nb[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] =
                        add(nb[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)],
                            mul(b[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)],
                                cur[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)]));
        b = nb;
    }
    // Entries of 1 - X B as polynomials in X over k(v)[t].
    using XP = std::vector<KP>;
    const Poly one = Poly::constant(q, Var::Theta, 1);
    auto xadd = [&](const XP& a, const XP& c) {
        XP out(std::max(a.size(), c.size()));
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = add(i < a.size() ? a[i] : KP{}, i < c.size() ? c[i] : KP{});
        return out;
    };
    auto xmul = [&](const XP& a, const XP& c) {
        XP out(a.size() + c.size() > 0 ? a.size() + c.size() - 1 : 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], c[j]));
        return out;
    };
    auto xneg = [&](const XP& a) {
        XP out = a;
        for (auto& kp : out)
            for (auto& x : kp) x = -x;
        return out;
    };
    Matrix<XP> mx(static_cast<std::size_t>(r), std::vector<XP>(static_cast<std::size_t>(r)));
    for (int a = 0; a < r; ++a)
        for (int c = 0; c < r; ++c) {
            XP e(2);
            if (a == c) e[0] = KP{one};
            KP nb = b[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
            for (auto& x : nb) x = -x;
            e[1] = nb;
            mx[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = e;
        }
    std::function<XP(const Matrix<XP>&)> cofactor = [&](const Matrix<XP>& a) -> XP {
        const std::size_t n = a.size();
        if (n == 1) return a[0][0];
        XP acc;
        for (std::size_t j = 0; j < n; ++j) {
            Matrix<XP> minor;
            for (std::size_t i = 1; i < n; ++i) {
                std::vector<XP> row;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != j) row.push_back(a[i][k]);
                minor.push_back(row);
            }
            XP term = xmul(a[0][j], cofactor(minor));
            acc = xadd(acc, j % 2 == 0 ? term : xneg(term));
        }
        return acc;
    };
    XP chi = cofactor(mx);
    EulerFactor out;
    out.place = p;
    for (int j = 0; j <= r; ++j) {
        KP c = j < static_cast<int>(chi.size()) ? chi[static_cast<std::size_t>(j)] : KP{};
        std::vector<Coeff> coeffs;
        for (const Poly& x : c) {
            if (!x.is_constant()) fail(ErrorCode::DescentFailure, "Euler factor coefficient outside F_q[t]");
            coeffs.push_back(x.coeff(0));
        }
        out.coeffs.emplace_back(q, Var::T, std::move(coeffs));
    }
    return out;
}

}  // namespace tmot
