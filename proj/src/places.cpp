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

#include "tmot/places.hpp"

#include <algorithm>
#include <fstream>

#include "gf2x.hpp"
#include "tmot/error.hpp"
#include "tmot/text.hpp"

namespace tmot {

namespace {

int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

bool has_root(const Poly& v) {
    for (int c = 0; c < v.q(); ++c)
        if (v.eval(static_cast<Coeff>(c)) == 0) return true;
    return false;
}

}  // namespace

std::uint64_t monic_count(int q, int d) {
    std::uint64_t n = 1;
    for (int i = 0; i < d; ++i) n *= static_cast<std::uint64_t>(q);
    return n;
}

std::uint64_t necklace_count(int q, int d) {
    long long sum = 0;
    for (int e = 1; e <= d; ++e)
        if (d % e == 0) sum += moebius(e) * static_cast<long long>(monic_count(q, d / e));
    return static_cast<std::uint64_t>(sum / d);
}

void for_each_irreducible(int q, int d, std::uint64_t begin, std::uint64_t end,
                          const std::function<void(const Place&)>& f) {
    end = std::min(end, monic_count(q, d));
    if (q == 2 && d <= 62) {
        const std::uint64_t high = std::uint64_t{1} << d;
        for (std::uint64_t k = begin; k < end; ++k) {
            const std::uint64_t v = high | k;
            if (!gf2x::irreducible64(v, d)) continue;
            Place p;
            p.v = Poly(2, Var::Theta, gf2x::unpack({v}));
            p.d = d;
            p.index = k;
            f(p);
        }
        return;
    }
    for (std::uint64_t k = begin; k < end; ++k) {
        Poly v = Poly::from_lex_index(q, Var::Theta, d, k);
        if (d > 1 && has_root(v)) continue;
        if (!is_irreducible(v)) continue;
        f(Place{std::move(v), d, k});
    }
}

std::vector<Place> monic_irreducibles(int q, int d) {
    std::vector<Place> out;
    for_each_irreducible(q, d, 0, monic_count(q, d), [&](const Place& p) { out.push_back(p); });
    return out;
}

Poly place_norm(const Place& p) { return p.v.with_var(Var::T); }

Place make_place(const Poly& v) {
    if (!v.is_monic() || !is_irreducible(v)) fail(ErrorCode::NotIrreducible, v.to_string() + " is not a place");
    return Place{v.with_var(Var::Theta), v.degree(), v.lex_index()};
}

void write_place_cache(const std::string& path, const std::vector<Place>& places) {
    std::ofstream out(path);
    for (const Place& p : places) out << p.v.to_string() << '\n';
}

std::optional<std::vector<Place>> read_place_cache(const std::string& path, int q, int d) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::vector<Place> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Poly v = parse_poly(line, q, Var::Theta);
        if (v.degree() != d) return std::nullopt;
        out.push_back(Place{v, d, v.lex_index()});
    }
    return out;
}

}  // namespace tmot
