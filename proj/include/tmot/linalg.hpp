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

#ifndef TMOT_LINALG_HPP
#define TMOT_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "tmot/rational.hpp"

namespace tmot {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
Matrix<T> filled(std::size_t rows, std::size_t cols, const T& value) {
    return Matrix<T>(rows, std::vector<T>(cols, value));
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
    if (a.empty()) return a;
    Matrix<T> r(a[0].size(), std::vector<T>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
    Matrix<T> r = filled(a.size(), b.empty() ? 0 : b[0].size(), zero);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[k].size(); ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

/// Fraction-free determinant (Bareiss). `div` must divide exactly.
template <class T, class Div>
T bareiss_det(Matrix<T> a, const T& one, Div div) {
    const std::size_t n = a.size();
    if (n == 0) return one;
    bool negate = false;
    T prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return one - one;
            std::swap(a[k], a[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = div(v, prev);
            }
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

/// Determinant by cofactor expansion along the first row; for the small
/// matrices over series where exact division is unavailable.
template <class T>
T leibniz_det(const Matrix<T>& a, const T& one) {
    const std::size_t n = a.size();
    if (n == 0) return one;
    if (n == 1) return a[0][0];
    T acc = one - one;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<T> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<T> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        T term = a[0][j] * leibniz_det(minor, one);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Adjugate via cofactors: adj(a) * a = det(a) * I.
template <class T, class Det>
Matrix<T> adjugate(const Matrix<T>& a, const T& one, Det det) {
    const std::size_t n = a.size();
    Matrix<T> r(n, std::vector<T>(n, one - one));
    if (n == 1) {
        r[0][0] = one;
        return r;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix<T> minor;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i) continue;
                std::vector<T> row;
                for (std::size_t l = 0; l < n; ++l)
                    if (l != j) row.push_back(a[k][l]);
                minor.push_back(std::move(row));
            }
            T c = det(minor);
            r[j][i] = ((i + j) % 2 == 0) ? c : -c;
        }
    return r;
}

using KMatrix = Matrix<RationalFn>;

KMatrix identity_matrix(int q, std::size_t n);
KMatrix zero_matrix(int q, std::size_t rows, std::size_t cols);
KMatrix frobenius(const KMatrix& a, int s);
KMatrix operator*(const KMatrix& a, const KMatrix& b);
KMatrix operator+(const KMatrix& a, const KMatrix& b);
KMatrix operator-(const KMatrix& a, const KMatrix& b);
KMatrix scaled(const KMatrix& a, const RationalFn& c);
bool is_zero(const KMatrix& a);

/// Reduced row echelon form over F_q(theta); returns the pivot columns.
std::vector<std::size_t> rref(KMatrix& a);
std::size_t rank(KMatrix a);
/// Basis of {u : u * a = 0} as row vectors.
KMatrix left_kernel(const KMatrix& a);
/// Inverse of a square matrix; throws Error(NotInvertible) if singular.
KMatrix inverse(const KMatrix& a);
RationalFn det(const KMatrix& a);

}  // namespace tmot

#endif
