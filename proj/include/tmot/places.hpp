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

#ifndef TMOT_PLACES_HPP
#define TMOT_PLACES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tmot/poly.hpp"

namespace tmot {

/// A finite place of F_q(theta): a monic irreducible polynomial in theta.
struct Place {
    Poly v;
    int d = 0;
    /// Rank of v among the monic polynomials of degree d.
    std::uint64_t index = 0;
};

/// q^d, the number of monic polynomials of degree d.
std::uint64_t monic_count(int q, int d);
/// (1/d) * sum over e | d of mu(e) q^(d/e).
std::uint64_t necklace_count(int q, int d);

/// Calls f on every monic irreducible of degree d whose lexicographic index
/// lies in [begin, end), in increasing index order.
void for_each_irreducible(int q, int d, std::uint64_t begin, std::uint64_t end,
                          const std::function<void(const Place&)>& f);
std::vector<Place> monic_irreducibles(int q, int d);

/// Nv in F_q[t]: for K = F_q(theta) the same polynomial with theta renamed t.
Poly place_norm(const Place& p);
Place make_place(const Poly& v);

/// Plain-text place cache, one polynomial per line.
void write_place_cache(const std::string& path, const std::vector<Place>& places);
std::optional<std::vector<Place>> read_place_cache(const std::string& path, int q, int d);

}  // namespace tmot

#endif
