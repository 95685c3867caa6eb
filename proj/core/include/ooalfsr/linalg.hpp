/**************************************************************************
 * linalg.hpp
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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ooalfsr/field.hpp"

namespace ooalfsr {

using Vector = std::vector<Elem>;

/// Rank over F of the given vectors (all of equal length).
std::size_t rank(const Field& F, std::vector<Vector> vectors);

/// True iff the vectors are linearly independent over F.
bool linearly_independent(const Field& F, std::span<const Vector> vectors);

/// Incremental row-echelon basis over F.
class EchelonBasis {
public:
    EchelonBasis(Field F, std::size_t length) : F_(std::move(F)), length_(length) {}

    /// Reduces v against the basis; adds it and returns true if independent.
    bool insert(Vector v);
    bool contains(Vector v) const;
    std::size_t dimension() const noexcept { return rows_.size(); }
    /// The reduced basis rows (pivot entries normalised to 1).
    const std::vector<Vector>& rows() const noexcept { return rows_; }

private:
    void reduce(Vector& v) const;

    Field F_;
    std::size_t length_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace ooalfsr
