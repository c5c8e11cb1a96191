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

#include "tmot/linalg.hpp"

#include "tmot/error.hpp"

namespace tmot {

KMatrix zero_matrix(int q, std::size_t rows, std::size_t cols) {
    return filled(rows, cols, RationalFn(Poly(q, Var::Theta)));
}

KMatrix identity_matrix(int q, std::size_t n) {
    KMatrix r = zero_matrix(q, n, n);
    for (std::size_t i = 0; i < n; ++i) r[i][i] = RationalFn::constant(q, 1);
    return r;
}

KMatrix frobenius(const KMatrix& a, int s) {
    KMatrix r = a;
    for (auto& row : r)
        for (auto& x : row) x = x.frobenius(s);
    return r;
}

KMatrix operator*(const KMatrix& a, const KMatrix& b) {
    const int q = a.empty() || a[0].empty() ? 2 : a[0][0].q();
    return multiply(a, b, RationalFn(Poly(q, Var::Theta)));
}

KMatrix operator+(const KMatrix& a, const KMatrix& b) {
    KMatrix r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

KMatrix operator-(const KMatrix& a, const KMatrix& b) {
    KMatrix r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
    return r;
}

KMatrix scaled(const KMatrix& a, const RationalFn& c) {
    KMatrix r = a;
    for (auto& row : r)
        for (auto& x : row) x = x * c;
    return r;
}

bool is_zero(const KMatrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

std::vector<std::size_t> rref(KMatrix& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const RationalFn inv = a[r][c].inverse();
        for (auto& x : a[r]) x = x * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const RationalFn f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(KMatrix a) { return rref(a).size(); }

KMatrix left_kernel(const KMatrix& a) {
    // u * a = 0  <=>  a^T u^T = 0.
    KMatrix at = transpose(a);
    const int q = a.empty() || a[0].empty() ? 2 : a[0][0].q();
    const std::size_t n = a.size();
    std::vector<std::size_t> piv = rref(at);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    KMatrix basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<RationalFn> u(n, RationalFn(Poly(q, Var::Theta)));
        u[free] = RationalFn::constant(q, 1);
        for (std::size_t k = 0; k < piv.size(); ++k) u[piv[k]] = -at[k][free];
        basis.push_back(std::move(u));
    }
    return basis;
}

KMatrix inverse(const KMatrix& a) {
    const std::size_t n = a.size();
    const int q = n == 0 ? 2 : a[0][0].q();
    KMatrix aug = zero_matrix(q, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = RationalFn::constant(q, 1);
    }
    std::vector<std::size_t> piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) fail(ErrorCode::NotInvertible, "singular matrix");
    KMatrix r = zero_matrix(q, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = aug[i][n + j];
    return r;
}

RationalFn det(const KMatrix& a) {
    const int q = a.empty() ? 2 : a[0][0].q();
    return bareiss_det(a, RationalFn::constant(q, 1), [](const RationalFn& x, const RationalFn& y) { return x / y; });
}

}  // namespace tmot
