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

// Bit-packed polynomial kernels over F_2. Bit i of word i/64 holds the
// coefficient of x^i. Used behind Poly for large q = 2 operands and by the
// Euler-factor fast path.

#ifndef TMOT_SRC_GF2X_HPP
#define TMOT_SRC_GF2X_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#if defined(__PCLMUL__)
#include <immintrin.h>
#endif

#include "tmot/field.hpp"

namespace tmot::gf2x {

using Words = std::vector<std::uint64_t>;

/// Carry-less product of two 64-bit words; returns {low, high}.
inline void clmul(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) noexcept {
#if defined(__PCLMUL__)
    __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                     _mm_cvtsi64_si128(static_cast<long long>(b)), 0);
    lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(r));
    hi = static_cast<std::uint64_t>(_mm_extract_epi64(r, 1));
#else
    std::uint64_t l = 0, h = 0;
    while (b != 0) {
        int i = std::countr_zero(b);
        l ^= a << i;
        if (i != 0) h ^= a >> (64 - i);
        b &= b - 1;
    }
    lo = l;
    hi = h;
#endif
}

/// Low 64 bits of the carry-less product; exact when deg a + deg b < 64.
inline std::uint64_t clmul_lo(std::uint64_t a, std::uint64_t b) noexcept {
#if defined(__PCLMUL__)
    __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                     _mm_cvtsi64_si128(static_cast<long long>(b)), 0);
    return static_cast<std::uint64_t>(_mm_cvtsi128_si64(r));
#else
    std::uint64_t l = 0;
    while (b != 0) {
        l ^= a << std::countr_zero(b);
        b &= b - 1;
    }
    return l;
#endif
}

inline int degree(const Words& a) noexcept {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<int>(64 * i) + 63 - std::countl_zero(a[i]);
    return -1;
}

inline void trim(Words& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Words pack(const std::vector<Coeff>& c) {
    Words w((c.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] & 1) w[i / 64] |= std::uint64_t{1} << (i % 64);
    return w;
}

inline std::vector<Coeff> unpack(const Words& w) {
    int d = degree(w);
    std::vector<Coeff> c(static_cast<std::size_t>(d + 1), 0);
    for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = static_cast<Coeff>((w[i / 64] >> (i % 64)) & 1);
    return c;
}

inline Words mul(const Words& a, const Words& b) {
    if (a.empty() || b.empty()) return {};
    Words r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t lo, hi;
            clmul(a[i], b[j], lo, hi);
            r[i + j] ^= lo;
            r[i + j + 1] ^= hi;
        }
    }
    trim(r);
    return r;
}

/// a ^= b * x^shift
inline void xor_shifted(Words& a, const Words& b, int shift) {
    std::size_t ws = static_cast<std::size_t>(shift / 64);
    int bs = shift % 64;
    std::size_t need = b.size() + ws + 1;
    if (a.size() < need) a.resize(need, 0);
    if (bs == 0) {
        for (std::size_t j = 0; j < b.size(); ++j) a[j + ws] ^= b[j];
    } else {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[j + ws] ^= (b[j] << bs) | carry;
            carry = b[j] >> (64 - bs);
        }
        a[b.size() + ws] ^= carry;
    }
}

/// Replaces a by a mod b and, when quot is non-null, stores the quotient.
inline void reduce(Words& a, const Words& b, Words* quot = nullptr) {
    int db = degree(b);
    int da = degree(a);
    if (quot) quot->assign(da >= db ? static_cast<std::size_t>((da - db) / 64 + 1) : 0, 0);
    while (da >= db) {
        int s = da - db;
        xor_shifted(a, b, s);
        if (quot) (*quot)[static_cast<std::size_t>(s / 64)] ^= std::uint64_t{1} << (s % 64);
        da = degree(a);
    }
    trim(a);
    if (quot) trim(*quot);
}

inline Words gcd(Words a, Words b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        reduce(a, b);
        std::swap(a, b);
    }
    return a;
}


// Single-word helpers for residue fields F_2[x]/(v) with deg v <= 63.

inline int degree64(std::uint64_t a) noexcept { return a == 0 ? -1 : 63 - std::countl_zero(a); }

/// (hi:lo) mod v, where v has degree d >= 1.
inline std::uint64_t reduce128(std::uint64_t lo, std::uint64_t hi, std::uint64_t v, int d) noexcept {
    while (hi != 0) {
        int top = 64 + degree64(hi);
        int s = top - d;
        if (s >= 64) {
            hi ^= v << (s - 64);
        } else {
            lo ^= v << s;
            if (s != 0) hi ^= v >> (64 - s);
        }
    }
    int dl;
    while ((dl = degree64(lo)) >= d) lo ^= v << (dl - d);
    return lo;
}

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t v, int d) noexcept {
    std::uint64_t lo, hi;
    clmul(a, b, lo, hi);
    return reduce128(lo, hi, v, d);
}

inline std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) noexcept {
    while (b != 0) {
        int db = degree64(b);
        int da;
        while ((da = degree64(a)) >= db) a ^= b << (da - db);
        std::swap(a, b);
    }
    return a;
}

/// Inverse of a nonzero a modulo v (v irreducible, deg a < deg v).
inline std::uint64_t invmod64(std::uint64_t a, std::uint64_t v) noexcept {
    // Invariant: s_i * a = r_i mod v.
    std::uint64_t r0 = v, r1 = a, s0 = 0, s1 = 1;
    while (r1 > 1) {
        const int d1 = degree64(r1);
        int d0;
        while ((d0 = degree64(r0)) >= d1) {
            r0 ^= r1 << (d0 - d1);
            s0 ^= s1 << (d0 - d1);
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    return s1;
}

/// v of degree d is irreducible iff x^(2^d) = x mod v and
/// gcd(x^(2^(d/p)) - x, v) = 1 for each prime p | d.
inline bool irreducible64(std::uint64_t v, int d) noexcept {
    if (d == 1) return true;
    if ((v & 1) == 0 || (std::popcount(v) & 1) == 0) return false;
    int primes[8];
    int np = 0;
    for (int p = 2, m = d; m > 1; ++p) {
        if (m % p == 0) {
            primes[np++] = p;
            while (m % p == 0) m /= p;
        }
    }
    std::uint64_t cur = 2;  // x^(2^k) mod v
    for (int k = 1; k <= d; ++k) {
        cur = mulmod64(cur, cur, v, d);
        for (int i = 0; i < np; ++i)
            if (k == d / primes[i] && gcd64(cur ^ 2, v) != 1) return false;
    }
    return cur == 2;
}

}  // namespace tmot::gf2x

#endif
