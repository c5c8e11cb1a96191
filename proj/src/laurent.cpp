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

#include "tmot/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "tmot/error.hpp"

namespace tmot {

void LaurentSeries::normalize() {
    std::size_t skip = 0;
    while (skip < c_.size() && c_[skip] == 0) ++skip;
    if (skip == c_.size()) {
        c_.clear();
        top_ = -prec_;
        return;
    }
    if (skip != 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(skip));
        top_ -= static_cast<int>(skip);
    }
}

LaurentSeries LaurentSeries::from_coeffs(int q, Var var, int top, std::vector<Coeff> coeffs, int n) {
    LaurentSeries s(q, var, n);
    s.top_ = top;
    const long long keep = static_cast<long long>(top) + n;
    if (keep <= 0) {
        s.top_ = -n;
        return s;
    }
    coeffs.resize(static_cast<std::size_t>(keep), 0);
    for (auto& c : coeffs) c = static_cast<Coeff>(c % q);
    s.c_ = std::move(coeffs);
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::from_poly(const Poly& p, int n) {
    const int q = p.q() == 0 ? 2 : p.q();
    if (p.is_zero()) return LaurentSeries(q, p.var(), n);
    std::vector<Coeff> c(p.coeffs().rbegin(), p.coeffs().rend());
    return from_coeffs(q, p.var(), p.degree(), std::move(c), n);
}

LaurentSeries LaurentSeries::monomial(int q, Var var, int exponent, long long c, int n) {
    return from_coeffs(q, var, exponent, {PrimeField(q).reduce(c)}, n);
}

LaurentSeries LaurentSeries::from_rational(const Poly& num, const Poly& den, int n) {
    if (den.is_zero()) fail(ErrorCode::NotInvertible, "zero denominator");
    const int q = den.q();
    const Var var = den.var();
    if (num.is_zero()) return LaurentSeries(q, var, n);
    PrimeField f(q);
    const int da = num.degree(), db = den.degree();
    const int top = da - db;
    const long long count = static_cast<long long>(top) + n;
    if (count <= 0) return LaurentSeries(q, var, n);
    const Coeff inv_b0 = f.inv(den.lead());
    std::vector<Coeff> c(static_cast<std::size_t>(count), 0);
    // Power series division in y = 1/x of the reversed polynomials.
    std::vector<int> bnz;
    for (int i = 1; i <= db; ++i)
        if (den.coeff(db - i) != 0) bnz.push_back(i);
    for (long long k = 0; k < count; ++k) {
        long long acc = k <= da ? num.coeff(da - static_cast<int>(k)) : 0;
        for (int i : bnz) {
            if (i > k) break;
            acc -= static_cast<long long>(den.coeff(db - i)) * c[static_cast<std::size_t>(k - i)];
        }
        c[static_cast<std::size_t>(k)] = f.mul(f.reduce(acc), inv_b0);
    }
    return from_coeffs(q, var, top, std::move(c), n);
}

Coeff LaurentSeries::coeff(int e) const {
    if (e <= -prec_) throw std::out_of_range("coefficient below the known precision");
    if (e > top_) return 0;
    return c_[static_cast<std::size_t>(top_ - e)];
}

std::vector<int> LaurentSeries::support() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) out.push_back(top_ - static_cast<int>(k));
    return out;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = static_cast<Coeff>(x == 0 ? 0 : q_ - x);
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.var_ != b.var_ || a.q_ != b.q_) throw std::invalid_argument("series in different rings");
    const int n = std::min(a.prec_, b.prec_);
    const int top = std::max(a.top_, b.top_);
    const long long count = static_cast<long long>(top) + n;
    LaurentSeries r(a.q_, a.var_, n);
    if (count <= 0) return r;
    r.top_ = top;
    r.c_.assign(static_cast<std::size_t>(count), 0);
    for (const LaurentSeries* s : {&a, &b}) {
        const int off = top - s->top_;
        for (std::size_t k = 0; k < s->c_.size(); ++k) {
            const long long idx = off + static_cast<long long>(k);
            if (idx >= count) break;
            int v = r.c_[static_cast<std::size_t>(idx)] + s->c_[k];
            r.c_[static_cast<std::size_t>(idx)] = static_cast<Coeff>(v >= a.q_ ? v - a.q_ : v);
        }
    }
    r.normalize();
    return r;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.var_ != b.var_ || a.q_ != b.q_) throw std::invalid_argument("series in different rings");
    const long long n = std::min(static_cast<long long>(b.prec_) - a.top_, static_cast<long long>(a.prec_) - b.top_);
    LaurentSeries r(a.q_, a.var_, static_cast<int>(n));
    if (a.is_zero() || b.is_zero()) return r;
    const long long top = static_cast<long long>(a.top_) + b.top_;
    const long long count = top + n;
    if (count <= 0) return r;
    const std::size_t cnt = static_cast<std::size_t>(count);
    std::vector<std::uint32_t> acc(cnt, 0);
    const std::size_t la = std::min(a.c_.size(), cnt);
    for (std::size_t i = 0; i < la; ++i) {
        const std::uint32_t ai = a.c_[i];
        if (ai == 0) continue;
        const std::size_t lb = std::min(b.c_.size(), cnt - i);
        std::uint32_t* dst = acc.data() + i;
        for (std::size_t j = 0; j < lb; ++j) dst[j] += ai * b.c_[j];
        // Keep the accumulators far from overflow for large q.
        if ((i & 0xff) == 0xff)
            for (auto& x : acc) x %= static_cast<std::uint32_t>(a.q_);
    }
    r.top_ = static_cast<int>(top);
    r.c_.resize(cnt);
    for (std::size_t k = 0; k < cnt; ++k) r.c_[k] = static_cast<Coeff>(acc[k] % static_cast<std::uint32_t>(a.q_));
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::scaled(long long c) const {
    PrimeField f(q_);
    Coeff k = f.reduce(c);
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = f.mul(x, k);
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries r = *this;
    r.top_ += k;
    r.prec_ -= k;
    return r;
}

LaurentSeries LaurentSeries::inverse() const {
    if (is_zero()) fail(ErrorCode::ZeroLeadingTerm, "series is zero to precision " + std::to_string(prec_));
    PrimeField f(q_);
    const std::size_t count = c_.size();
    std::vector<Coeff> out(count, 0);
    const Coeff inv0 = f.inv(c_[0]);
    std::vector<std::size_t> nz;
    for (std::size_t i = 1; i < count; ++i)
        if (c_[i] != 0) nz.push_back(i);
    for (std::size_t k = 0; k < count; ++k) {
        long long acc = k == 0 ? 1 : 0;
        for (std::size_t i : nz) {
            if (i > k) break;
            acc -= static_cast<long long>(c_[i]) * out[k - i];
        }
        out[k] = f.mul(f.reduce(acc), inv0);
    }
    return from_coeffs(q_, var_, -top_, std::move(out), prec_ + 2 * top_);
}

LaurentSeries LaurentSeries::truncated(int n) const {
    if (n >= prec_) return *this;
    return from_coeffs(q_, var_, top_, c_, n);
}

LaurentSeries LaurentSeries::frobenius(int s, int cap) const {
    long long k = 1;
    for (int i = 0; i < s; ++i) k *= q_;
    const long long n = std::min<long long>(static_cast<long long>(prec_) * k, cap);
    if (is_zero()) return LaurentSeries(q_, var_, static_cast<int>(n));
    const long long top = static_cast<long long>(top_) * k;
    const long long count = top + n;
    if (count <= 0) return LaurentSeries(q_, var_, static_cast<int>(n));
    std::vector<Coeff> out(static_cast<std::size_t>(count), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const long long idx = static_cast<long long>(i) * k;
        if (idx >= count) break;
        out[static_cast<std::size_t>(idx)] = c_[i];
    }
    return from_coeffs(q_, var_, static_cast<int>(top), std::move(out), static_cast<int>(n));
}

LaurentSeries LaurentSeries::with_var(Var v) const {
    LaurentSeries r = *this;
    r.var_ = v;
    return r;
}

bool LaurentSeries::agrees_with(const LaurentSeries& o, int n) const {
    const int m = std::min({n, prec_, o.prec_});
    const int hi = std::max(top_, o.top_);
    for (int e = hi; e > -m; --e)
        if (coeff(e) != o.coeff(e)) return false;
    return true;
}

std::string LaurentSeries::to_string() const {
    const char x = var_letter(var_);
    auto power = [x](int e) -> std::string {
        if (e == 0) return "1";
        if (e == 1) return std::string(1, x);
        return std::string(1, x) + "^" + std::to_string(e);
    };
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const int e = top_ - static_cast<int>(k);
        std::string term;
        if (e == 0)
            term = std::to_string(c_[k]);
        else if (c_[k] == 1)
            term = power(e);
        else
            term = std::to_string(c_[k]) + "*" + power(e);
        if (!out.empty()) out += " + ";
        out += term;
    }
    if (!out.empty()) out += " + ";
    out += "O(" + power(-prec_) + ")";
    return out;
}

namespace {

// Reads an optionally signed integer at pos.
long long read_int(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        fail(ErrorCode::ConfigParse, "expected an integer in '" + s + "'");
    return std::stoll(s.substr(start, pos - start));
}

}  // namespace

LaurentSeries parse_laurent(const std::string& text, int q) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    std::vector<std::pair<int, long long>> terms;
    Var var = Var::T;
    bool seen_var = false;
    int prec = std::numeric_limits<int>::min();
    std::size_t pos = 0;
    auto var_of = [&](char ch) {
        Var v = ch == 't' ? Var::T : Var::Theta;
        if (seen_var && v != var) fail(ErrorCode::ConfigParse, "mixed variables in '" + text + "'");
        var = v;
        seen_var = true;
    };
    auto read_power = [&]() -> int {
        char ch = s[pos];
        if (ch != 't' && ch != 'x') fail(ErrorCode::ConfigParse, "bad term in '" + text + "'");
        var_of(ch);
        ++pos;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            return static_cast<int>(read_int(s, pos));
        }
        return 1;
    };
    while (pos < s.size()) {
        if (s.compare(pos, 2, "O(") == 0) {
            pos += 2;
            int e = 0;
            if (s[pos] == '1')
                ++pos;
            else
                e = read_power();
            if (pos >= s.size() || s[pos] != ')') fail(ErrorCode::ConfigParse, "unterminated O() in '" + text + "'");
            ++pos;
            prec = -e;
        } else {
            long long c = 1;
            int e = 0;
            if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
                c = read_int(s, pos);
                if (pos < s.size() && s[pos] == '*') {
                    ++pos;
                    e = read_power();
                }
            } else {
                e = read_power();
            }
            terms.emplace_back(e, c);
        }
        if (pos < s.size()) {
            if (s[pos] != '+') fail(ErrorCode::ConfigParse, "expected '+' in '" + text + "'");
            ++pos;
        }
    }
    if (prec == std::numeric_limits<int>::min()) fail(ErrorCode::ConfigParse, "missing O() term in '" + text + "'");
    LaurentSeries r(q, var, prec);
    for (auto [e, c] : terms) r += LaurentSeries::monomial(q, var, e, c, prec);
    return r;
}

}  // namespace tmot
