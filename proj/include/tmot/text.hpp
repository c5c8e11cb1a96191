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

#ifndef TMOT_TEXT_HPP
#define TMOT_TEXT_HPP

#include <string>

#include "tmot/bipoly.hpp"
#include "tmot/poly.hpp"
#include "tmot/rational.hpp"

namespace tmot {

// Expressions in t and x (x standing for theta) built from decimal integers,
// + - * / ^ and parentheses. Division is allowed by t-free expressions only,
// negative powers likewise. Failures throw Error(ConfigParse).

KtPoly parse_kt(const std::string& text, int q);
/// Requires every t-coefficient to be a polynomial in x.
BiPoly parse_bipoly(const std::string& text, int q);
/// Requires a t-free expression.
RationalFn parse_rational(const std::string& text, int q);
/// Requires a polynomial in the single variable v.
Poly parse_poly(const std::string& text, int q, Var v);

}  // namespace tmot

#endif
