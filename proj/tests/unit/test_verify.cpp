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

#include "doctest.h"
#include "tmot/error.hpp"
#include "tmot/text.hpp"
#include "tmot/verify.hpp"

using namespace tmot;

namespace {

PrecisionPolicy rigorous(int x, int d = 30) {
    PrecisionPolicy p;
    p.precision = x;
    p.mode = PrecisionMode::Rigorous;
    p.max_degree = d;
    return p;
}

SigmaModule drinfeld(int q, const std::vector<std::string>& a) {
    std::vector<RationalFn> c;
    for (const auto& s : a) c.push_back(parse_rational(s, q));
    return drinfeld_motive(q, c);
}

SigmaModule from_rows(int q, const std::vector<std::vector<std::string>>& rows) {
    Matrix<BiPoly> m;
    for (const auto& row : rows) {
        std::vector<BiPoly> r;
        for (const auto& s : row) r.push_back(parse_bipoly(s, q));
        m.push_back(r);
    }
    return SigmaModule::from_matrix(q, m);
}

std::vector<RationalFn> point(int q, const std::vector<std::string>& xs) {
    std::vector<RationalFn> z;
    for (const auto& s : xs) z.push_back(parse_rational(s, q));
    return z;
}

}  // namespace

TEST_CASE("Carlitz log(1) against zeta(1)") {
    for (int q : {2, 3}) {
        LatticeReport r = verify_conjecture(carlitz_power(q, 1), {point(q, {"1"})}, rigorous(8));
        CHECK(r.dim_w == 1);
        CHECK(r.constant != 0);
        CHECK(r.deviation == 8);
        CHECK(r.verdict == "consistent with the conjecture to theta^-8");
    }
}

TEST_CASE("default points come from the unit vector scan") {
    LatticeReport r = verify_conjecture(carlitz_power(2, 1), {}, rigorous(6));
    REQUIRE(r.points.size() == 1);
    CHECK(r.points[0][0] == RationalFn::constant(2, 1));
    CHECK(r.deviation == 6);
}

TEST_CASE("lattice ratio for the tensor with Carlitz") {
    SigmaModule m = from_rows(2, {{"x+t", "x^2+t^2"}, {"x+t", "0"}});
    LatticeReport r = verify_conjecture(m, {point(2, {"1", "0", "0"}), point(2, {"0", "0", "1"})}, rigorous(8));
    CHECK(r.dim_w == 2);
    CHECK(r.constant == 1);
    CHECK(r.deviation == 8);
    // Unimodular change of points: swapping and adding leaves the deviation alone.
    LatticeReport s = verify_conjecture(m, {point(2, {"1", "0", "1"}), point(2, {"1", "0", "0"})}, rigorous(8));
    CHECK(s.constant != 0);
    CHECK(s.deviation == 8);
    CHECK(s.l.series == r.l.series);
}

TEST_CASE("precision honesty") {
    SigmaModule m = drinfeld(2, {"1", "1"});
    LatticeReport a = verify_logalg(m, rigorous(6));
    LatticeReport b = verify_logalg(m, rigorous(9));
    CHECK(a.l.series == b.l.series.truncated(6));
    CHECK(a.y[0] == b.y[0].truncated(a.y[0].precision()));
    CHECK(a.deviation == 6);
    CHECK(b.deviation == 9);
    CHECK(a.integral_part[0] == b.integral_part[0]);
}

TEST_CASE("logalg on a rank one twist agrees with the twisted sum") {
    LatticeReport r = verify_logalg(drinfeld(3, {"2"}), rigorous(5));
    CHECK(r.l.series == rank1_twisted_sum(3, 2, 4).truncated(5));
    CHECK(r.deviation == 5);
}

TEST_CASE("verify errors") {
    SigmaModule c = carlitz_power(2, 1);
    CHECK_THROWS_WITH_AS(verify_conjecture(c, {point(2, {"1"}), point(2, {"x"})}, rigorous(4)),
                         doctest::Contains("need 1 points"), Error);
    CHECK_THROWS_AS(verify_conjecture(c, {point(2, {"1/x"})}, rigorous(4)), Error);
    try {
        verify_conjecture(c, {point(2, {"x^3"})}, rigorous(4));
        FAIL("expected LogDivergent");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LogDivergent);
    }
    CHECK_THROWS_AS(verify_logalg(from_rows(2, {{"x+t", "x^2+t^2"}, {"x+t", "0"}}), rigorous(4)), Error);
}
