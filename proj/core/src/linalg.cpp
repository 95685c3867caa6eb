/**************************************************************************
 * linalg.cpp
 *
 * Copyright 2026 The ooalfsr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "ooalfsr/linalg.hpp"

#include <stdexcept>

namespace ooalfsr {

std::size_t rank(const Field& F, std::vector<Vector> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        const Elem inv = F.inv(m[r][c]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            const Elem factor = F.mul(m[i][c], inv);
            for (std::size_t j = c; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(factor, m[r][j]));
        }
        ++r;
    }
    return r;
}

bool linearly_independent(const Field& F, std::span<const Vector> vectors) {
    return rank(F, std::vector<Vector>(vectors.begin(), vectors.end())) == vectors.size();
}

void EchelonBasis::reduce(Vector& v) const {
    if (v.size() != length_) throw std::invalid_argument("EchelonBasis: vector length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Elem c = v[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < length_; ++j) v[j] = F_.sub(v[j], F_.mul(c, rows_[i][j]));
    }
}

bool EchelonBasis::insert(Vector v) {
    reduce(v);
    std::size_t p = 0;
    while (p < length_ && v[p] == 0) ++p;
    if (p == length_) return false;
    const Elem inv = F_.inv(v[p]);
    for (auto& x : v) x = F_.mul(x, inv);
    // Keep existing rows reduced at the new pivot.
    for (auto& row : rows_) {
        const Elem c = row[p];
        if (c == 0) continue;
        for (std::size_t j = 0; j < length_; ++j) row[j] = F_.sub(row[j], F_.mul(c, v[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool EchelonBasis::contains(Vector v) const {
    reduce(v);
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace ooalfsr
