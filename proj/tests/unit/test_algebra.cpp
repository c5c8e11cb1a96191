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

#include <random>

#include "doctest.h"
#include "tmot/bipoly.hpp"
#include "tmot/error.hpp"
#include "tmot/laurent.hpp"
#include "tmot/poly.hpp"
#include "tmot/rational.hpp"
#include "tmot/text.hpp"

using namespace tmot;

namespace {

Poly px(int q, std::vector<Coeff> c) { return Poly(q, Var::Theta, std::move(c)); }
Poly pt(int q, std::vector<Coeff> c) { return Poly(q, Var::T, std::move(c)); }

Poly random_poly(std::mt19937& rng, int q, int deg, Var v = Var::Theta) {
    std::uniform_int_distribution<int> d(0, q - 1);
    std::vector<Coeff> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = static_cast<Coeff>(d(rng));
    return Poly(q, v, c);
}

// Brute-force irreducibility: no monic divisor of degree 1..deg/2.
bool irreducible_by_trial(const Poly& v) {
    const int q = v.q();
    for (int e = 1; 2 * e <= v.degree(); ++e) {
        std::uint64_t total = 1;
        for (int i = 0; i < e; ++i) total *= static_cast<std::uint64_t>(q);
        for (std::uint64_t k = 0; k < total; ++k)
            if ((v % Poly::from_lex_index(q, v.var(), e, k)).is_zero()) return false;
    }
    return v.degree() >= 1;
}

// Coefficient of x^e in num/den computed by clearing the denominator:
// finds the unique c with den * c = num through the given exponent.
std::vector<Coeff> naive_expansion(const Poly& num, const Poly& den, int top, int count) {
    const int q = den.q();
    PrimeField f(q);
    std::vector<Coeff> c(static_cast<std::size_t>(count), 0);
    // Residual r = num - den * (partial sum), tracked as a map exponent -> coeff.
    std::vector<long long> r;  // index i <-> exponent num.degree() - i
    const int hi = num.degree();
    r.assign(static_cast<std::size_t>(hi - (top - count) + den.degree() + 2), 0);
    for (int i = 0; i <= hi; ++i) r[static_cast<std::size_t>(hi - i)] = num.coeff(i);
    for (int k = 0; k < count; ++k) {
        const int e = top - k;  // exponent in the quotient
        const int lead_e = e + den.degree();
        const long long cur = r[static_cast<std::size_t>(hi - lead_e)];
        Coeff ck = f.mul(f.reduce(cur), f.inv(den.lead()));
        c[static_cast<std::size_t>(k)] = ck;
        for (int j = 0; j <= den.degree(); ++j)
            r[static_cast<std::size_t>(hi - (e + j))] -= static_cast<long long>(ck) * den.coeff(j);
    }
    return c;
}

}  // namespace

TEST_CASE("prime field axioms hold exhaustively") {
    for (int q : {2, 3, 5}) {
        PrimeField f(q);
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(Coeff(a), Coeff(b)) == (a + b) % q);
                CHECK(f.mul(Coeff(a), Coeff(b)) == (a * b) % q);
                for (int c = 0; c < q; ++c) {
                    CHECK(f.mul(f.mul(Coeff(a), Coeff(b)), Coeff(c)) == f.mul(Coeff(a), f.mul(Coeff(b), Coeff(c))));
                    CHECK(f.mul(Coeff(a), f.add(Coeff(b), Coeff(c))) ==
                          f.add(f.mul(Coeff(a), Coeff(b)), f.mul(Coeff(a), Coeff(c))));
                }
            }
            if (a != 0) CHECK(f.mul(Coeff(a), f.inv(Coeff(a))) == 1);
            CHECK(f.add(Coeff(a), f.neg(Coeff(a))) == 0);
        }
        CHECK_THROWS_AS(f.inv(0), Error);
    }
    CHECK_THROWS_AS(require_prime_field(4), std::invalid_argument);
}

TEST_CASE("poly division and gcd identities on random inputs") {
    std::mt19937 rng(7);
    for (int q : {2, 3, 5}) {
        for (int it = 0; it < 200; ++it) {
            Poly a = random_poly(rng, q, static_cast<int>(rng() % 12));
            Poly b = random_poly(rng, q, static_cast<int>(rng() % 8));
            if (b.is_zero()) continue;
            auto [quo, rem] = Poly::divmod(a, b);
            CHECK(quo * b + rem == a);
            CHECK(rem.degree() < b.degree());
            Xgcd e = xgcd(a, b);
            CHECK(e.u * a + e.v * b == e.g);
            CHECK((a % e.g).is_zero());
            CHECK((b % e.g).is_zero());
            CHECK(gcd(a, b) == e.g);
        }
    }
}

TEST_CASE("packed q = 2 kernels agree with the schoolbook path") {
    std::mt19937 rng(11);
    for (int it = 0; it < 20; ++it) {
        Poly a = random_poly(rng, 2, 300 + static_cast<int>(rng() % 200));
        Poly b = random_poly(rng, 2, 150 + static_cast<int>(rng() % 200));
        Poly prod = a * b;
        // Schoolbook oracle.
        std::vector<Coeff> c(a.coeffs().size() + b.coeffs().size(), 0);
        for (std::size_t i = 0; i < a.coeffs().size(); ++i)
            for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] ^= a.coeffs()[i] & b.coeffs()[j];
        CHECK(prod == Poly(2, Var::Theta, c));
        auto [quo, rem] = Poly::divmod(prod + a, b);
        CHECK(quo * b + rem == prod + a);
        CHECK(rem.degree() < b.degree());
        Poly g = gcd(a * b, b * b);
        CHECK(((b * b) % g).is_zero());
        CHECK((g % b.monic()).is_zero());
    }
}

TEST_CASE("inverse modulo an irreducible") {
    CHECK(poly_inv_mod(px(2, {0, 1}), px(2, {1, 1, 1})) == px(2, {1, 1}));
    CHECK(poly_inv_mod(px(3, {1}), px(3, {1, 1, 0, 1})) == px(3, {1}));
    CHECK(poly_inv_mod(px(3, {2}), px(3, {0, 1})) == px(3, {2}));
    CHECK_THROWS_AS(poly_inv_mod(px(2, {1, 1, 1}), px(2, {1, 1, 1})), Error);
    try {
        poly_inv_mod(px(2, {1}), px(2, {1, 0, 1}), true);
        FAIL("expected NotIrreducible");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotIrreducible);
    }
    std::mt19937 rng(3);
    for (int q : {2, 3, 5}) {
        Poly v = px(q, {1, 1, 0, 0, 1});
        while (!irreducible_by_trial(v)) v = random_poly(rng, q, 4).monic() + Poly::monomial(q, Var::Theta, 4) - Poly::monomial(q, Var::Theta, 4, random_poly(rng, q, 4).monic().lead());
        for (int it = 0; it < 50; ++it) {
            Poly x = random_poly(rng, q, 3);
            if ((x % v).is_zero()) continue;
            CHECK(((x * poly_inv_mod(x, v)) % v).is_one());
        }
    }
}

TEST_CASE("irreducibility test matches trial division") {
    for (int q : {2, 3}) {
        for (int d = 1; d <= (q == 2 ? 7 : 4); ++d) {
            std::uint64_t total = 1;
            for (int i = 0; i < d; ++i) total *= static_cast<std::uint64_t>(q);
            for (std::uint64_t k = 0; k < total; ++k) {
                Poly v = Poly::from_lex_index(q, Var::Theta, d, k);
                CHECK(v.lex_index() == k);
                CHECK(is_irreducible(v) == irreducible_by_trial(v));
            }
        }
    }
}

TEST_CASE("residue field Frobenius is a field automorphism of order d") {
    std::mt19937 rng(5);
    for (int q : {2, 3, 5}) {
        const int d = 5;
        Poly v;
        for (std::uint64_t k = 0;; ++k) {
            v = Poly::from_lex_index(q, Var::Theta, d, k);
            if (is_irreducible(v)) break;
        }
        for (int it = 0; it < 30; ++it) {
            Poly a = random_poly(rng, q, d - 1), b = random_poly(rng, q, d - 1);
            auto fr = [&](const Poly& x) { return pow_mod(x, static_cast<unsigned long long>(q), v); };
            CHECK(fr(a + b) == ((fr(a) + fr(b)) % v));
            CHECK(fr((a * b) % v) == ((fr(a) * fr(b)) % v));
            CHECK(frobenius_mod(a, d, v) == a % v);
            CHECK(frobenius_mod(a, 2, v) == fr(fr(a)));
        }
    }
}

TEST_CASE("poly text form") {
    CHECK(pt(2, {1, 1, 1}).to_string() == "t^2+t+1");
    CHECK(px(3, {0, 1, 0, 2}).to_string() == "2*x^3+x");
    CHECK(Poly(5, Var::T).to_string() == "0");
}

TEST_CASE("rational functions stay reduced") {
    RationalFn a(px(2, {0, 1, 1}), px(2, {1, 1}));  // (x^2+x)/(x+1) = x
    CHECK(a == RationalFn(px(2, {0, 1})));
    RationalFn b(px(3, {1}), px(3, {2, 1}));
    RationalFn c = b + b.inverse();
    CHECK(c * b == b * b + RationalFn::constant(3, 1));
    CHECK(b.frobenius(1) == b * b * b);
    CHECK(b.valuation() == 1);
    CHECK(b.to_string() == "1/(x+2)");
}

TEST_CASE("bivariate exact division and substitution") {
    std::mt19937 rng(9);
    for (int it = 0; it < 40; ++it) {
        const int q = it % 2 == 0 ? 2 : 3;
        std::vector<Poly> ca, cb;
        for (int i = 0; i < 3; ++i) ca.push_back(random_poly(rng, q, 3));
        for (int i = 0; i < 2; ++i) cb.push_back(random_poly(rng, q, 2));
        BiPoly a(q, ca), b(q, cb);
        if (b.is_zero()) continue;
        CHECK((a * b).exact_div(b) == a);
        CHECK((a * b).at_theta() == a.at_theta() * b.at_theta());
        CHECK((a * b).frobenius(1) == a.frobenius(1) * b.frobenius(1));
    }
    BiPoly s(2, {px(2, {0, 0, 1}), px(2, {0, 1}), px(2, {1})});
    CHECK(to_string(s) == "t^2+t*x+x^2");
}

TEST_CASE("laurent inverse examples") {
    auto one_plus = LaurentSeries::from_coeffs(2, Var::T, 0, {1, 1}, 4);
    CHECK(one_plus.inverse().to_string() == "1 + t^-1 + t^-2 + t^-3 + O(t^-4)");
    auto unit = LaurentSeries::monomial(3, Var::T, 0, 1, 6);
    CHECK(unit.inverse() == unit);
    // 1/(t+1) over F_3: the leading exponent shifts the known window.
    auto s = LaurentSeries::from_coeffs(3, Var::T, 1, {1, 1}, 3);
    auto inv = s.inverse();
    CHECK(inv.precision() == 5);
    CHECK(inv.to_string() == "t^-1 + 2*t^-2 + t^-3 + 2*t^-4 + O(t^-5)");
    auto back = s * inv;
    CHECK(back.agrees_with(LaurentSeries::monomial(3, Var::T, 0, 1, 100), back.precision()));
    CHECK_THROWS_AS(LaurentSeries(2, Var::T, 5).inverse(), Error);
}

TEST_CASE("rational to laurent against a long-division oracle") {
    auto a = LaurentSeries::from_rational(px(2, {1}), px(2, {1, 1}), 4);
    CHECK(a.to_string() == "x^-1 + x^-2 + x^-3 + O(x^-4)");
    auto b = LaurentSeries::from_rational(px(2, {1}), px(2, {0, 1, 1}), 4);
    CHECK(b.to_string() == "x^-2 + x^-3 + O(x^-4)");
    CHECK(LaurentSeries::from_poly(px(3, {0, 0, 1}), 5).to_string() == "x^2 + O(x^-5)");
    std::mt19937 rng(13);
    for (int it = 0; it < 100; ++it) {
        const int q = it % 2 == 0 ? 2 : 5;
        Poly num = random_poly(rng, q, static_cast<int>(rng() % 6));
        Poly den = random_poly(rng, q, 1 + static_cast<int>(rng() % 6));
        if (den.is_zero() || num.is_zero()) continue;
        const int n = 12;
        auto s = LaurentSeries::from_rational(num, den, n);
        const int top = num.degree() - den.degree();
        auto expect = naive_expansion(num, den, top, top + n);
        for (int k = 0; k < top + n; ++k) CHECK(s.coeff(top - k) == expect[static_cast<std::size_t>(k)]);
        auto back = s * LaurentSeries::from_poly(den, 1000);
        CHECK(back.agrees_with(LaurentSeries::from_poly(num, 1000), back.precision()));
    }
}

TEST_CASE("laurent precision bookkeeping is never optimistic") {
    std::mt19937 rng(17);
    for (int it = 0; it < 200; ++it) {
        const int q = it % 3 == 0 ? 3 : 2;
        Poly na = random_poly(rng, q, 4), da = random_poly(rng, q, 3);
        Poly nb = random_poly(rng, q, 3), db = random_poly(rng, q, 4);
        if (na.is_zero() || da.is_zero() || nb.is_zero() || db.is_zero()) continue;
        const int n = 8;
        auto a = LaurentSeries::from_rational(na, da, n), b = LaurentSeries::from_rational(nb, db, n);
        auto a5 = LaurentSeries::from_rational(na, da, n + 5), b5 = LaurentSeries::from_rational(nb, db, n + 5);
        auto sum = a + b, sum5 = a5 + b5;
        CHECK(sum.agrees_with(sum5, sum.precision()));
        CHECK(sum5.precision() >= sum.precision());
        auto prod = a * b, prod5 = a5 * b5;
        CHECK(prod5.precision() >= prod.precision());
        CHECK(prod.agrees_with(prod5, prod.precision()));
        auto exact = LaurentSeries::from_rational(na * nb, da * db, prod.precision() + 5);
        CHECK(prod.agrees_with(exact, prod.precision()));
        auto inv = a.inverse(), inv5 = a5.inverse();
        CHECK(inv.agrees_with(inv5, inv.precision()));
        auto exact_inv = LaurentSeries::from_rational(da, na, inv.precision() + 5);
        CHECK(inv.agrees_with(exact_inv, inv.precision()));
        auto one = a * inv;
        CHECK(one.agrees_with(LaurentSeries::monomial(q, Var::Theta, 0, 1, 100), one.precision()));
        auto fr = a.frobenius(1, 40);
        auto pw = a * a;
        if (q == 3) pw = pw * a;
        CHECK(fr.agrees_with(pw, std::min(fr.precision(), pw.precision())));
    }
}

TEST_CASE("laurent text round trip and substitution") {
    auto s = LaurentSeries::from_coeffs(3, Var::T, 0, {1, 0, 1, 0, 0, 0, 0, 0, 2}, 11);
    CHECK(s.to_string() == "1 + t^-2 + 2*t^-8 + O(t^-11)");
    CHECK(parse_laurent(s.to_string(), 3) == s);
    auto th = substitute_t_theta(s);
    CHECK(th.to_string() == "1 + x^-2 + 2*x^-8 + O(x^-11)");
    CHECK(th.precision() == s.precision());
    CHECK(parse_laurent("O(t^-3)", 2).is_zero());
}

TEST_CASE("text parser precedence and errors") {
    const int q = 3;
    const Poly th = Poly::monomial(q, Var::Theta, 1);
    CHECK(parse_rational("-x^2", q) == RationalFn(-(th * th)));
    CHECK(parse_rational("-x^2+1", q) == RationalFn(Poly::constant(q, Var::Theta, 1) - th * th));
    CHECK(parse_rational("2*x^-1", q) == RationalFn(Poly::constant(q, Var::Theta, 2), th));
    CHECK(parse_rational("1/(x+1)", q) == RationalFn(Poly::constant(q, Var::Theta, 1), th + Poly::constant(q, Var::Theta, 1)));
    CHECK(parse_rational("x*-x", q) == RationalFn(-(th * th)));
    CHECK(parse_rational("(x+1)^2", q) == RationalFn(th * th + th.scaled(2) + Poly::constant(q, Var::Theta, 1)));
    CHECK(to_string(parse_bipoly("(t-x)^2", q)) == "t^2+t*x+x^2");
    CHECK(to_string(parse_bipoly("-t^2 - x*t", q)) == "2*t^2+2*t*x");
    CHECK(parse_poly("t^3+2", q, Var::T) == Poly(q, Var::T, {2, 0, 0, 1}));
    for (const char* bad : {"t^-1", "1/t", "x+", "(x", "x^", "y", "1/0", "0^-1"})
        CHECK_THROWS_AS(parse_bipoly(bad, q), Error);
    CHECK_THROWS_AS(parse_rational("t", q), Error);
}
