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
#include "tmot/error.hpp"
#include "tmot/sigma.hpp"
#include "tmot/text.hpp"

using namespace tmot;

namespace {

std::vector<Place> places_up_to(int q, int dmax) {
    std::vector<Place> out;
    for (int d = 1; d <= dmax; ++d)
        for (const Place& p : monic_irreducibles(q, d)) out.push_back(p);
    return out;
}

Poly tpoly(int q, const std::string& s) { return parse_poly(s, q, Var::T); }

std::vector<Poly> coeffs_of(const EulerFactor& f) { return f.coeffs; }

SigmaModule drinfeld(int q, std::initializer_list<const char*> coeffs) {
    std::vector<RationalFn> a;
    for (const char* c : coeffs) a.push_back(parse_rational(c, q));
    return drinfeld_motive(q, a);
}

SigmaModule from_text(int q, std::vector<std::vector<std::string>> rows) {
    Matrix<BiPoly> m;
    for (auto& row : rows) {
        std::vector<BiPoly> r;
        for (auto& s : row) r.push_back(parse_bipoly(s, q));
        m.push_back(r);
    }
    return SigmaModule::from_matrix(q, m);
}

// P(cX) for a polynomial c in t.
std::vector<Poly> rescale(const std::vector<Poly>& p, const Poly& c) {
    std::vector<Poly> out;
    Poly pw = Poly::constant(c.q(), Var::T, 1);
    for (const Poly& x : p) {
        out.push_back(x * pw);
        pw = pw * c;
    }
    return out;
}

std::vector<Poly> xmul(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    std::vector<Poly> out(a.size() + b.size() - 1, Poly(a[0].q(), Var::T));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Random elementary matrix over F_q[theta][t] and its inverse.
std::pair<Matrix<BiPoly>, Matrix<BiPoly>> random_elementary(std::mt19937& rng, int q, int r) {
    const BiPoly zero(q), one = BiPoly::constant(q, Poly::constant(q, Var::Theta, 1));
    Matrix<BiPoly> e = filled(static_cast<std::size_t>(r), static_cast<std::size_t>(r), zero);
    for (int i = 0; i < r; ++i) e[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = one;
    Matrix<BiPoly> inv = e;
    int i = static_cast<int>(rng() % static_cast<unsigned>(r));
    int j = static_cast<int>(rng() % static_cast<unsigned>(r - 1));
    if (j >= i) ++j;
    std::vector<Poly> c;
    std::uniform_int_distribution<int> dig(0, q - 1);
    for (int k = 0; k < 2; ++k) c.push_back(Poly(q, Var::Theta, {Coeff(dig(rng)), Coeff(dig(rng))}));
    BiPoly x(q, c);
    e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x;
    inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -x;
    return {e, inv};
}

}  // namespace

TEST_CASE("Carlitz motive and its powers") {
    SigmaModule c = carlitz_power(2, 1);
    CHECK(c.to_string() == "[[t+x]]");
    CHECK(c.n() == 1);
    CHECK(carlitz_power(2, 2).to_string() == "[[t^2+x^2]]");
    CHECK(carlitz_power(3, 3).to_string() == "[[t^3+2*x^3]]");
    CHECK(drinfeld(2, {"1"}).to_string() == "[[t+x]]");
}

TEST_CASE("Carlitz Euler factors are 1 - Nv X") {
    for (int q : {2, 3, 5}) {
        SigmaModule c = carlitz_power(q, 1);
        for (const Place& p : places_up_to(q, q == 2 ? 8 : 3)) {
            EulerFactor f = euler_factor(c, p);
            REQUIRE(f.coeffs.size() == 2);
            CHECK(f.coeffs[0].is_one());
            CHECK(f.coeffs[1] == -place_norm(p));
        }
    }
    Place v2 = make_place(Poly(2, Var::Theta, {1, 1, 1}));
    CHECK(euler_factor(carlitz_power(2, 1), v2).to_string() == "1 + (t^2+t+1)*X");
}

TEST_CASE("rank two Drinfeld motive") {
    SigmaModule m = drinfeld(2, {"1", "1"});
    CHECK(m.to_string() == "[[0, t+x], [1, 1]]");
    CHECK(m.n() == 1);
    Place v = make_place(Poly(2, Var::Theta, {0, 1}));
    CHECK(euler_factor(m, v).to_string() == "1 + X + t*X^2");
    // Frobenius relation pi^2 - pi - t = 0 at theta.
    CHECK(euler_factor(drinfeld(3, {"-1", "1"}), make_place(Poly(3, Var::Theta, {0, 1}))).to_string() ==
          "1 + 2*X + 2*t*X^2");
    SigmaModule m3 = drinfeld(3, {"x", "-1"});
    CHECK(m3.n() == 1);
    CHECK_THROWS_AS(drinfeld(3, {"1", "x"}), Error);
    try {
        drinfeld(3, {"1", "0"});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadLeadingCoeff);
    }
}

TEST_CASE("det and dual twist") {
    SigmaModule m = drinfeld(2, {"1", "1"});
    SigmaModule d = det_module(m);
    CHECK(d.rank() == 1);
    for (const Place& p : places_up_to(2, 5))
        CHECK(coeffs_of(euler_factor(d, p)) == coeffs_of(euler_factor(carlitz_power(2, 1), p)));
    SigmaModule dual = dual_twist(m);
    CHECK(dual.to_string() == "[[1, 1], [t+x, 0]]");
    Place v = make_place(Poly(2, Var::Theta, {0, 1}));
    CHECK(euler_factor(dual, v).to_string() == "1 + X + t*X^2");
    CHECK(dual_twist(carlitz_power(2, 1)).to_string() == "[[1]]");
    CHECK(dual_twist(carlitz_power(2, 2)).to_string() == "[[1]]");
    // Eigenvalues of the dual twist are Nv^n / lambda.
    for (int q : {2, 3}) {
        SigmaModule mm = q == 2 ? drinfeld(2, {"x", "1"}) : drinfeld(3, {"x", "-1"});
        SigmaModule dd = dual_twist(mm);
        for (const Place& p : places_up_to(q, 4)) {
            auto a = euler_factor(mm, p).coeffs, b = euler_factor(dd, p).coeffs;
            Poly nv = place_norm(p);
            CHECK(b[1] * a[2] == nv * a[1]);
            CHECK(b[2] * a[2] == nv * nv);
        }
    }
}

TEST_CASE("fast and reference Euler factors agree") {
    std::vector<SigmaModule> mods = {drinfeld(2, {"1", "1"}), drinfeld(2, {"x", "x^2+1", "1"}),
                                     sym2(drinfeld(3, {"x", "-1"})), drinfeld(3, {"x^2", "2"}),
                                     drinfeld(5, {"x+3", "4"}), tensor(drinfeld(2, {"1", "1"}), carlitz_power(2, 1)),
                                     drinfeld(2, {"1/x", "1"})};
    for (const SigmaModule& m : mods) {
        for (const Place& p : places_up_to(m.q(), m.q() == 2 ? 6 : 3)) {
            if (!m.good_at(p)) {
                CHECK_THROWS_AS(euler_factor(m, p), Error);
                continue;
            }
            EulerFactor a = euler_factor(m, p), b = euler_factor_reference(m, p);
            CHECK(a.coeffs == b.coeffs);
            CHECK(a.coeffs[0].is_one());
            CHECK(a.degree() == m.rank());
        }
    }
}

TEST_CASE("Euler factors are invariant under unimodular basis change") {
    std::mt19937 rng(2024);
    std::vector<SigmaModule> mods = {drinfeld(2, {"1", "1"}), drinfeld(3, {"x", "-1"}), drinfeld(2, {"x", "1", "1"})};
    int changes = 0;
    for (const SigmaModule& m : mods) {
        auto places = places_up_to(m.q(), m.q() == 2 ? 4 : 2);
        std::vector<std::vector<Poly>> base;
        for (const Place& p : places) base.push_back(euler_factor(m, p).coeffs);
        for (int it = 0; it < 34; ++it, ++changes) {
            auto [u, ui] = random_elementary(rng, m.q(), m.rank());
            auto [u2, ui2] = random_elementary(rng, m.q(), m.rank());
            const BiPoly zero(m.q());
            SigmaModule c = change_basis(m, multiply(u, u2, zero), multiply(ui2, ui, zero));
            for (std::size_t i = 0; i < places.size(); ++i) CHECK(euler_factor(c, places[i]).coeffs == base[i]);
        }
    }
    CHECK(changes >= 100);
}

TEST_CASE("shift law for tensoring with the Carlitz motive") {
    std::vector<SigmaModule> mods = {drinfeld(2, {"1", "1"}), drinfeld(3, {"x", "-1"}), carlitz_power(2, 1),
                                     trivial_module(3), sym2(drinfeld(3, {"-1", "1"}))};
    for (const SigmaModule& m : mods) {
        SigmaModule mc = tensor(m, carlitz_power(m.q(), 1));
        CHECK(mc.n() == m.n() + m.rank());
        for (const Place& p : places_up_to(m.q(), 4))
            CHECK(euler_factor(mc, p).coeffs == rescale(euler_factor(m, p).coeffs, place_norm(p)));
    }
}

TEST_CASE("tensor matches the printed basis for M tensor C") {
    SigmaModule m = drinfeld(2, {"1", "1"});
    SigmaModule printed_m = from_text(2, {{"1", "x+t"}, {"1", "0"}});
    SigmaModule printed = from_text(2, {{"x+t", "x^2+t^2"}, {"x+t", "0"}});
    CHECK(printed.n() == 3);
    SigmaModule mc = tensor(m, carlitz_power(2, 1));
    for (const Place& p : places_up_to(2, 6)) {
        CHECK(euler_factor(printed_m, p).coeffs == euler_factor(m, p).coeffs);
        CHECK(euler_factor(printed, p).coeffs == euler_factor(mc, p).coeffs);
    }
}

TEST_CASE("direct sums multiply Euler factors") {
    SigmaModule a = drinfeld(3, {"x", "-1"}), b = carlitz_power(3, 2);
    SigmaModule s = direct_sum(a, b);
    for (const Place& p : places_up_to(3, 3))
        CHECK(euler_factor(s, p).coeffs == xmul(euler_factor(a, p).coeffs, euler_factor(b, p).coeffs));
}

TEST_CASE("symmetric square eigenvalue law") {
    for (int q : {2, 3}) {
        SigmaModule m = q == 2 ? drinfeld(2, {"1", "1"}) : drinfeld(3, {"-1", "1"});
        SigmaModule s = sym2(m);
        CHECK(s.rank() == 3);
        CHECK(s.n() == 3);
        for (const Place& p : places_up_to(q, 4)) {
            auto c = euler_factor(m, p).coeffs;
            // e1 = -c1, e2 = c2 for the two eigenvalues.
            Poly e1 = -c[1], e2 = c[2];
            Poly f1 = e1 * e1 - e2;
            Poly f2 = e2 * e1 * e1 - e2 * e2;
            Poly f3 = e2 * e2 * e2;
            auto got = euler_factor(s, p).coeffs;
            CHECK(got[1] == -f1);
            CHECK(got[2] == f2);
            CHECK(got[3] == -f3);
        }
    }
    SigmaModule r1 = from_text(3, {{"t-x"}});
    CHECK(sym2(r1).to_string() == from_text(3, {{"(t-x)^2"}}).to_string());
}

TEST_CASE("printed symmetric square basis agrees with sym2 of x + tau - tau^2") {
    SigmaModule printed = from_text(3, {{"1", "t-x", "t^2+x*t+x^2"}, {"1", "x-t", "0"}, {"1", "0", "0"}});
    CHECK(printed.n() == 3);
    SigmaModule s = sym2(drinfeld(3, {"1", "-1"}));
    for (const Place& p : places_up_to(3, 3)) CHECK(euler_factor(printed, p).coeffs == euler_factor(s, p).coeffs);
    Place v = make_place(Poly(3, Var::Theta, {0, 1}));
    CHECK(euler_factor(printed, v).coeffs != euler_factor(sym2(drinfeld(3, {"-1", "1"})), v).coeffs);
}

TEST_CASE("effectivity failures and rank cap") {
    CHECK_THROWS_AS(from_text(2, {{"t"}}), Error);
    CHECK_THROWS_AS(from_text(2, {{"0"}}), Error);
    try {
        tensor(drinfeld(2, {"1", "1"}), drinfeld(2, {"1", "1"}), 3);
        FAIL("expected RankOverflow");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RankOverflow);
    }
}

TEST_CASE("Newton slopes") {
    auto s1 = newton_slopes(carlitz_power(2, 1));
    REQUIRE(s1.size() == 1);
    CHECK(s1[0] == Fraction{-1, 1});
    auto s2 = newton_slopes(drinfeld(2, {"1", "1"}));
    REQUIRE(s2.size() == 2);
    CHECK(s2[0] == Fraction{-1, 2});
    CHECK(s2[1] == Fraction{-1, 2});
    auto s3 = newton_slopes(drinfeld(2, {"1", "0", "1"}));
    CHECK(max_slope_magnitude(s3) == Fraction{1, 3});
    try {
        newton_slopes(trivial_module(2));
        FAIL("expected NotFinitelyGenerated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotFinitelyGenerated);
    }
    CHECK(slopes_of(trivial_module(2))[0] == Fraction{0, 1});
    CHECK(max_slope_magnitude(slopes_of(dual_twist(sym2(drinfeld(3, {"-1", "1"}))))) == Fraction{2, 1});
}

TEST_CASE("bad reduction at places dividing the denominator") {
    SigmaModule m = drinfeld(2, {"1/x", "1"});
    CHECK(m.denominator().to_string() == "x");
    Place v = make_place(Poly(2, Var::Theta, {0, 1}));
    try {
        euler_factor(m, v);
        FAIL("expected BadReduction");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadReduction);
    }
    Place w = make_place(Poly(2, Var::Theta, {1, 1}));
    CHECK(euler_factor(m, w).coeffs == euler_factor_reference(m, w).coeffs);
}
