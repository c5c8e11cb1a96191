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

#include "tmot/field.hpp"

#include <stdexcept>
#include <string>

#include "tmot/error.hpp"

namespace tmot {

bool is_prime(int n) noexcept {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_prime_field(int q) {
    if (q > kMaxPrime || !is_prime(q))
        throw std::invalid_argument("q must be prime and at most " + std::to_string(kMaxPrime) + ", got " +
                                    std::to_string(q));
}

PrimeField::PrimeField(int q) : q_(q) { require_prime_field(q); }

Coeff PrimeField::inv(Coeff a) const { return inverse_mod_prime(a, q_); }

Coeff inverse_mod_prime(Coeff a, int q) {
    if (a % q == 0) fail(ErrorCode::NotInvertible, "zero has no inverse in F_" + std::to_string(q));
    int r0 = q, r1 = a % q, s0 = 0, s1 = 1;
    while (r1 != 0) {
        int k = r0 / r1;
        int r2 = r0 - k * r1;
        r0 = r1;
        r1 = r2;
        int s2 = s0 - k * s1;
        s0 = s1;
        s1 = s2;
    }
    int inv = s0 % q;
    return static_cast<Coeff>(inv < 0 ? inv + q : inv);
}

}  // namespace tmot
