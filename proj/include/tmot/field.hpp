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

#ifndef TMOT_FIELD_HPP
#define TMOT_FIELD_HPP

#include <cstdint>

namespace tmot {

/// Elements of F_q (q prime) are residues 0..q-1 stored in a byte.
using Coeff = std::uint8_t;

/// Largest supported prime; keeps products of two residues inside 16 bits.
inline constexpr int kMaxPrime = 251;

bool is_prime(int n) noexcept;

/// Throws std::invalid_argument unless 2 <= q <= kMaxPrime and q is prime.
void require_prime_field(int q);

/// Arithmetic in the prime field F_q.
class PrimeField {
   public:
    explicit PrimeField(int q);

    int q() const noexcept { return q_; }

    Coeff add(Coeff a, Coeff b) const noexcept {
        int s = a + b;
        return static_cast<Coeff>(s >= q_ ? s - q_ : s);
    }
    Coeff sub(Coeff a, Coeff b) const noexcept {
        int s = a - b;
        return static_cast<Coeff>(s < 0 ? s + q_ : s);
    }
    Coeff neg(Coeff a) const noexcept { return static_cast<Coeff>(a == 0 ? 0 : q_ - a); }
    Coeff mul(Coeff a, Coeff b) const noexcept { return static_cast<Coeff>((a * b) % q_); }
    /// Throws Error(NotInvertible) on zero.
    Coeff inv(Coeff a) const;
    Coeff reduce(long long v) const noexcept {
        long long r = v % q_;
        return static_cast<Coeff>(r < 0 ? r + q_ : r);
    }

   private:
    int q_;
};

/// Inverse of a nonzero residue modulo the prime q (extended Euclid).
Coeff inverse_mod_prime(Coeff a, int q);

}  // namespace tmot

#endif
