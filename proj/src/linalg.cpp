/*
   Copyright 2026 The skewcalc Authors

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

#include "skew/linalg.hpp"

namespace skew {

std::size_t rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Element inv = m[r][c].inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Element f = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

Element determinant(const FieldPtr& field, Matrix m) {
    const std::size_t n = m.size();
    Element det = field->one();
    for (std::size_t c = 0; c < n; ++c) {
        if (m[c].size() != n) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return field->zero();
        if (piv != c) {
            std::swap(m[c], m[piv]);
            det = -det;
        }
        det *= m[c][c];
        Element inv = m[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            Element f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(ModMatrix& m, std::size_t cols, std::uint64_t p) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        auto inv = inv_mod(m[r][c], p);
        for (auto& x : m[r]) x = x * inv % p;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            auto f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank_mod_p(ModMatrix m, std::uint64_t p) {
    if (m.empty()) return 0;
    return rref(m, m[0].size(), p).size();
}

std::vector<std::vector<std::uint64_t>> kernel_mod_p(ModMatrix m, std::size_t cols, std::uint64_t p) {
    auto pivots = rref(m, cols, p);
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - m[i][f]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace skew
