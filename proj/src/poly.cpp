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

#include "tmot/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "gf2x.hpp"
#include "tmot/error.hpp"

namespace tmot {

namespace {

// Operands of size at least this use the packed kernels when q = 2.
constexpr std::size_t kPackedThreshold = 96;

int merge_q(int a, int b) {
    if (a == 0) return b;
    if (b != 0 && a != b) throw std::invalid_argument("polynomials over different prime fields");
    return a;
}

Var merge_var(const Poly& a, const Poly& b) {
    if (a.q() == 0) return b.var();
    if (b.q() == 0) return a.var();
    if (a.var() != b.var() && !a.is_constant() && !b.is_constant())
        throw std::invalid_argument("polynomials in different variables");
    return a.is_constant() ? b.var() : a.var();
}

std::vector<int> prime_divisors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

Poly::Poly(int q, Var var, std::vector<Coeff> coeffs) : q_(q), var_(var), c_(std::move(coeffs)) {
    for (auto& x : c_) x = static_cast<Coeff>(x % q_);
    normalize();
}

Poly Poly::constant(int q, Var var, long long c) {
    Poly p(q, var);
    PrimeField f(q);
    Coeff r = f.reduce(c);
    if (r != 0) p.c_.push_back(r);
    return p;
}

Poly Poly::monomial(int q, Var var, int degree, long long c) {
    Poly p(q, var);
    Coeff r = PrimeField(q).reduce(c);
    if (r != 0) {
        p.c_.assign(static_cast<std::size_t>(degree) + 1, 0);
        p.c_.back() = r;
    }
    return p;
}

Poly Poly::linear(int q, Var var, long long c) { return monomial(q, var, 1) - constant(q, var, c); }

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::weight() const noexcept {
    return static_cast<int>(std::count_if(c_.begin(), c_.end(), [](Coeff x) { return x != 0; }));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = static_cast<Coeff>(x == 0 ? 0 : q_ - x);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    Var v = merge_var(*this, o);
    q_ = merge_q(q_, o.q_);
    var_ = v;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        int s = c_[i] + o.c_[i];
        c_[i] = static_cast<Coeff>(s >= q_ ? s - q_ : s);
    }
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    Var v = merge_var(*this, o);
    q_ = merge_q(q_, o.q_);
    var_ = v;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        int s = c_[i] - o.c_[i];
        c_[i] = static_cast<Coeff>(s < 0 ? s + q_ : s);
    }
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r(merge_q(a.q_, b.q_), merge_var(a, b));
    if (a.is_zero() || b.is_zero()) return r;
    const int q = r.q_;
    if (q == 2 && std::min(a.c_.size(), b.c_.size()) >= kPackedThreshold) {
        r.c_ = gf2x::unpack(gf2x::mul(gf2x::pack(a.c_), gf2x::pack(b.c_)));
        return r;
    }
    const auto& x = a.c_.size() <= b.c_.size() ? a.c_ : b.c_;
    const auto& y = a.c_.size() <= b.c_.size() ? b.c_ : a.c_;
    std::vector<std::uint64_t> acc(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::uint64_t xi = x[i];
        if (xi == 0) continue;
        std::uint64_t* dst = acc.data() + i;
        for (std::size_t j = 0; j < y.size(); ++j) dst[j] += xi * y[j];
    }
    r.c_.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r.c_[i] = static_cast<Coeff>(acc[i] % static_cast<unsigned>(q));
    r.normalize();
    return r;
}

Poly Poly::scaled(long long c) const {
    Poly r = *this;
    PrimeField f(q_ == 0 ? 2 : q_);
    Coeff k = f.reduce(c);
    for (auto& x : r.c_) x = f.mul(x, k);
    r.normalize();
    return r;
}

Poly Poly::shifted(int k) const {
    Poly r = *this;
    if (!r.c_.empty() && k > 0) r.c_.insert(r.c_.begin(), static_cast<std::size_t>(k), Coeff{0});
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorCode::NotInvertible, "polynomial division by zero");
    const int q = merge_q(a.q_, b.q_);
    const Var v = merge_var(a, b);
    Poly quo(q, v), rem(q, v);
    if (a.degree() < b.degree()) {
        rem = a;
        rem.q_ = q;
        rem.var_ = v;
        return {quo, rem};
    }
    if (q == 2 && b.c_.size() >= kPackedThreshold) {
        auto aw = gf2x::pack(a.c_);
        gf2x::Words qw;
        gf2x::reduce(aw, gf2x::pack(b.c_), &qw);
        quo.c_ = gf2x::unpack(qw);
        rem.c_ = gf2x::unpack(aw);
        return {quo, rem};
    }
    PrimeField f(q);
    std::vector<Coeff> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    const Coeff inv_lead = f.inv(b.c_.back());
    quo.c_.assign(r.size() - db, 0);
    for (std::size_t i = r.size(); i-- > db;) {
        Coeff c = r[i];
        if (c == 0) continue;
        c = f.mul(c, inv_lead);
        quo.c_[i - db] = c;
        const int negc = q - c;
        Coeff* dst = r.data() + (i - db);
        for (std::size_t j = 0; j <= db; ++j) dst[j] = static_cast<Coeff>((dst[j] + negc * b.c_[j]) % q);
    }
    r.resize(db);
    rem.c_ = std::move(r);
    rem.normalize();
    quo.normalize();
    return {quo, rem};
}

Poly Poly::exact_div(const Poly& b) const {
    auto [quo, rem] = divmod(*this, b);
    if (!rem.is_zero()) fail(ErrorCode::Mismatch, "inexact polynomial division");
    return quo;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(inverse_mod_prime(lead(), q_));
}

Poly Poly::pow(unsigned long long e) const {
    Poly result = constant(q_, var_, 1);
    Poly base = *this;
    while (e != 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

Poly Poly::inflate(long long k) const {
    if (k == 1 || c_.size() <= 1) return *this;
    Poly r(q_, var_);
    r.c_.assign(static_cast<std::size_t>((static_cast<long long>(c_.size()) - 1) * k + 1), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<std::size_t>(k)] = c_[i];
    return r;
}

Poly Poly::frobenius(int s) const {
    long long k = 1;
    for (int i = 0; i < s; ++i) k *= q_;
    return inflate(k);
}

Poly Poly::with_var(Var v) const {
    Poly r = *this;
    r.var_ = v;
    return r;
}

Coeff Poly::eval(Coeff x) const {
    PrimeField f(q_);
    Coeff acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c_[i]);
    return acc;
}

std::uint64_t Poly::lex_index() const {
    std::uint64_t idx = 0;
    for (int i = degree() - 1; i >= 0; --i) idx = idx * static_cast<std::uint64_t>(q_) + coeff(i);
    return idx;
}

Poly Poly::from_lex_index(int q, Var var, int degree, std::uint64_t index) {
    std::vector<Coeff> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = 1;
    for (int i = 0; i < degree; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<Coeff>(index % static_cast<std::uint64_t>(q));
        index /= static_cast<std::uint64_t>(q);
    }
    Poly p(q, var);
    p.c_ = std::move(c);
    return p;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    const char x = var_letter(var_);
    for (int i = degree(); i >= 0; --i) {
        Coeff c = coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + '*';
        out += x;
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
}

Poly gcd(const Poly& a, const Poly& b) {
    const int q = merge_q(a.q(), b.q());
    if (q == 2 && std::min(a.coeffs().size(), b.coeffs().size()) >= kPackedThreshold) {
        return Poly(2, merge_var(a, b), gf2x::unpack(gf2x::gcd(gf2x::pack(a.coeffs()), gf2x::pack(b.coeffs()))));
    }
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
    const int q = merge_q(a.q(), b.q());
    const Var v = merge_var(a, b);
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(q, v, 1), s1(q, v);
    Poly t0(q, v), t1 = Poly::constant(q, v, 1);
    while (!r1.is_zero()) {
        auto [k, r2] = Poly::divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        Poly s2 = s0 - k * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - k * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Coeff li = inverse_mod_prime(r0.lead(), q);
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly pow_mod(const Poly& base, unsigned long long e, const Poly& m) {
    Poly result = Poly::constant(m.q(), m.var(), 1) % m;
    Poly b = base % m;
    while (e != 0) {
        if (e & 1) result = (result * b) % m;
        e >>= 1;
        if (e != 0) b = (b * b) % m;
    }
    return result;
}

Poly frobenius_mod(const Poly& base, int k, const Poly& m) {
    Poly r = base % m;
    for (int i = 0; i < k; ++i) r = pow_mod(r, static_cast<unsigned long long>(m.q()), m);
    return r;
}

Poly poly_inv_mod(const Poly& a, const Poly& v, bool check_irreducible) {
    if (check_irreducible && !is_irreducible(v))
        fail(ErrorCode::NotIrreducible, v.to_string() + " is not irreducible");
    Poly ar = a % v;
    if (ar.is_zero()) fail(ErrorCode::NotInvertible, a.to_string() + " is zero modulo " + v.to_string());
    Xgcd e = xgcd(ar, v);
    if (!e.g.is_one()) fail(ErrorCode::NotInvertible, a.to_string() + " shares a factor with " + v.to_string());
    return e.u % v;
}

bool is_irreducible(const Poly& v) {
    const int d = v.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const Poly x = Poly::monomial(v.q(), v.var(), 1);
    if (!(frobenius_mod(x, d, v) == x % v)) return false;
    for (int p : prime_divisors(d)) {
        Poly h = frobenius_mod(x, d / p, v) - x;
        if (!gcd(h, v).is_one()) return false;
    }
    return true;
}

}  // namespace tmot
