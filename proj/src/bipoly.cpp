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

#include "tmot/bipoly.hpp"

namespace tmot {

namespace {

std::string t_part(int k) {
    if (k == 0) return "";
    if (k == 1) return "t";
    return "t^" + std::to_string(k);
}

std::string x_part(int j) {
    if (j == 0) return "";
    if (j == 1) return "x";
    return "x^" + std::to_string(j);
}

}  // namespace

std::string to_string(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Poly& c = p.coeffs()[static_cast<std::size_t>(k)];
        for (int j = c.degree(); j >= 0; --j) {
            Coeff a = c.coeff(j);
            if (a == 0) continue;
            std::string term;
            if (a != 1) term = std::to_string(a);
            for (const std::string& part : {t_part(k), x_part(j)}) {
                if (part.empty()) continue;
                if (!term.empty()) term += '*';
                term += part;
            }
            if (term.empty()) term = "1";
            if (!out.empty()) out += '+';
            out += term;
        }
    }
    return out;
}

std::string to_string(const KtPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const RationalFn& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        if (c.num().weight() > 1 && c.is_polynomial()) cs = "(" + cs + ")";
        std::string term;
        if (k == 0)
            term = c.to_string();
        else if (c.is_one())
            term = t_part(k);
        else
            term = cs + "*" + t_part(k);
        if (!out.empty()) out += '+';
        out += term;
    }
    return out;
}

KtPoly to_kt(const BiPoly& p) {
    std::vector<RationalFn> c;
    c.reserve(p.coeffs().size());
    for (const Poly& x : p.coeffs()) c.emplace_back(x.q() == 0 ? Poly(p.q(), Var::Theta) : x);
    return KtPoly(p.q(), std::move(c));
}

BiPoly to_bipoly(const KtPoly& p) {
    std::vector<Poly> c;
    c.reserve(p.coeffs().size());
    for (const RationalFn& x : p.coeffs()) {
        if (!x.is_polynomial()) fail(ErrorCode::Mismatch, "non-integral coefficient " + x.to_string());
        c.push_back(x.num().scaled(inverse_mod_prime(x.den().lead(), p.q())));
    }
    return BiPoly(p.q(), std::move(c));
}

}  // namespace tmot
