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

#include <functional>

#include "doctest.h"
#include "tmot/error.hpp"
#include "tmot/text.hpp"
#include "tmot/tmodule.hpp"

using namespace tmot;

namespace {

RationalFn th(int q) { return RationalFn(Poly::monomial(q, Var::Theta, 1)); }
RationalFn th_pow(int q, long long e) { return RationalFn(Poly::monomial(q, Var::Theta, static_cast<int>(e))); }
RationalFn rf(const char* s, int q) { return parse_rational(s, q); }

long long ipow(long long q, int i) {
    long long r = 1;
    while (i-- > 0) r *= q;
    return r;
}

// prod_{j<i} (theta^{q^i} - theta^{q^j})
RationalFn carlitz_d(int q, int i) {
    RationalFn p = RationalFn::constant(q, 1);
    for (int j = 0; j < i; ++j) p *= th_pow(q, ipow(q, i)) - th_pow(q, ipow(q, j));
    return p;
}

// prod_{1<=j<=i} (theta - theta^{q^j})
RationalFn carlitz_l(int q, int i) {
    RationalFn p = RationalFn::constant(q, 1);
    for (int j = 1; j <= i; ++j) p *= th(q) - th_pow(q, ipow(q, j));
    return p;
}

bool is_identity_to(const TauSeries& s, int m) {
    const std::size_t d = s.c[0].size();
    if (!(s.c[0] == identity_matrix(s.q, d))) return false;
    for (int i = 1; i <= m; ++i)
        if (!is_zero(s.c[static_cast<std::size_t>(i)])) return false;
    return true;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::Mismatch;
}

// The three-dimensional module of M tensor C for theta + tau + tau^2 over F_2.
TModule tensor_module() {
    const int q = 2;
    auto z = RationalFn::constant(q, 0), o = RationalFn::constant(q, 1), t = th(q);
    KMatrix a0{{t, z, o}, {z, t, z}, {z, z, t}};
    KMatrix a1{{z, z, z}, {z, z, z}, {o, o, z}};
    KMatrix a2{{z, z, z}, {z, z, o}, {z, z, z}};
    return TModule(q, {a0, a1, a2});
}

}  // namespace

TEST_CASE("Carlitz exp and log coefficients") {
    for (int q : {2, 3, 5}) {
        const int m = q == 2 ? 8 : 4;
        ExpSeries e = exp_coefficients(carlitz_module(q), m);
        LogSeries l = log_coefficients(e, m);
        CHECK(e.c[1][0][0] == (th_pow(q, q) - th(q)).inverse());
        CHECK(l.c[1][0][0] == (th(q) - th_pow(q, q)).inverse());
        for (int i = 1; i <= m; ++i) {
            CHECK(e.c[static_cast<std::size_t>(i)][0][0] == carlitz_d(q, i).inverse());
            CHECK(l.c[static_cast<std::size_t>(i)][0][0] == carlitz_l(q, i).inverse());
            CHECK(e.c[static_cast<std::size_t>(i)][0][0] ==
                  e.c[static_cast<std::size_t>(i - 1)][0][0].frobenius(1) / (th_pow(q, ipow(q, i)) - th(q)));
            CHECK(l.c[static_cast<std::size_t>(i)][0][0] ==
                  l.c[static_cast<std::size_t>(i - 1)][0][0] / (th(q) - th_pow(q, ipow(q, i))));
        }
    }
    ExpSeries e0 = exp_coefficients(tensor_module(), 0);
    CHECK(e0.order() == 0);
    CHECK(e0.c[0] == identity_matrix(2, 3));
}

TEST_CASE("exp and log are mutually inverse to order 12") {
    std::vector<TModule> mods = {carlitz_module(2), drinfeld_module(2, {rf("1", 2), rf("1", 2)}),
                                 drinfeld_module(2, {rf("1", 2), rf("0", 2), rf("1", 2)})};
    for (const TModule& e : mods) {
        ExpSeries ex = exp_coefficients(e, 12);
        LogSeries lg = log_coefficients(ex, 12);
        CHECK(is_identity_to(compose(ex, lg, 12), 12));
        CHECK(is_identity_to(compose(lg, ex, 12), 12));
    }
}

TEST_CASE("functional equation and the action of t^2") {
    std::vector<TModule> mods = {drinfeld_module(3, {rf("x", 3), rf("-1", 3)}), tensor_module(),
                                 drinfeld_module(2, {rf("1/x", 2), rf("1", 2)})};
    for (const TModule& e : mods) {
        const int m = e.q() == 2 ? 6 : 4;
        ExpSeries ex = exp_coefficients(e, m);
        TauSeries phi = as_series(e);
        TauSeries d{e.q(), {e.coeff(0)}};
        CHECK(compose(ex, d, m).c == compose(phi, ex, m).c);
        TauSeries phi2 = compose(phi, phi, 2 * e.degree());
        TauSeries d2{e.q(), {e.coeff(0) * e.coeff(0)}};
        CHECK(compose(ex, d2, m).c == compose(phi2, ex, m).c);
        LogSeries lg = log_coefficients(ex, m);
        CHECK(is_identity_to(compose(ex, lg, m), m));
        CHECK(is_identity_to(compose(lg, ex, m), m));
    }
}

TEST_CASE("module validation") {
    const int q = 3;
    CHECK(code_of([] { TModule(3, {KMatrix{{th(3) + RationalFn::constant(3, 1)}}, KMatrix{{RationalFn::constant(3, 1)}}}); }) ==
          ErrorCode::SylvesterSingular);
    CHECK(code_of([] { TModule(3, {KMatrix{{th(3)}}}); }) == ErrorCode::DimensionMismatch);
    CHECK(carlitz_module(q).to_string() == "phi(t): x*x1 + x1^q");
    CHECK(tensor_module().action_lines() ==
          std::vector<std::string>{"x*x1 + x3", "x*x2 + x3^(q^2)", "x*x3 + x1^q + x2^q"});
}

TEST_CASE("Carlitz log at 1 against direct summation") {
    const int q = 3, prec = 8;
    SeriesCache cache(carlitz_module(q));
    Evaluation ev = cache.log(point_from_rational({RationalFn::constant(q, 1)}, 40), prec);
    RationalFn sum = RationalFn::constant(q, 1);
    for (int i = 1; i <= 3; ++i) sum += carlitz_l(q, i).inverse();
    CHECK(ev.value[0] == LaurentSeries::from_rational(sum, prec));
    CHECK(ev.value[0].coeff(-2) == 0);
    CHECK(ev.value[0].coeff(-3) == 2);
    CHECK(ev.terms == 2);
    Evaluation back = cache.exp(ev.value, prec);
    CHECK(back.value[0].to_string() == "1 + O(x^-8)");
}

TEST_CASE("evaluation basics") {
    SeriesCache c(tensor_module());
    Evaluation z = c.exp(zero_point(2, 3, 10), 10);
    for (const auto& v : z.value) CHECK(v.is_zero());
    // Additivity over F_q.
    const int q = 3, prec = 10;
    SeriesCache car(carlitz_module(q));
    KInfPoint x = point_from_rational({rf("1+1/x", q)}, 30), y = point_from_rational({rf("2/x^2", q)}, 30);
    KInfPoint xy{x[0] + y[0]};
    CHECK(car.log(xy, prec).value[0] == car.log(x, prec).value[0] + car.log(y, prec).value[0]);
    CHECK(car.exp(xy, prec).value[0] == car.exp(x, prec).value[0] + car.exp(y, prec).value[0]);
}

TEST_CASE("divergence and insufficient order") {
    SeriesCache car(carlitz_module(2));
    CHECK(code_of([&] { car.log(point_from_rational({rf("x^2", 2)}, 20), 10); }) == ErrorCode::Divergent);
    ExpSeries e = exp_coefficients(carlitz_module(2), 1);
    CHECK(code_of([&] { evaluate(e, point_from_rational({rf("1", 2)}, 80), 60); }) == ErrorCode::InsufficientOrder);
}

TEST_CASE("nearest integral point") {
    const int q = 2;
    LaurentSeries y = LaurentSeries::from_rational(RationalFn(Poly::monomial(q, Var::Theta, 19)) .inverse() + RationalFn::constant(q, 1), 25);
    IntegralPart a = nearest_integral({y}, 4);
    CHECK(a.poly[0].is_one());
    CHECK(a.deviation == 19);
    IntegralPart b = nearest_integral(point_from_rational({rf("x^2+x", q)}, 10), 4);
    CHECK(b.poly[0].to_string() == "x^2+x");
    CHECK(b.deviation == 10);
    IntegralPart c = nearest_integral(point_from_rational({rf("1/x", q)}, 10), 4);
    CHECK(c.poly[0].is_zero());
    CHECK(c.deviation == 1);
    CHECK(code_of([] { nearest_integral(point_from_rational({rf("x^5", 2)}, 10), 4); }) == ErrorCode::DegreeExceeded);
}
