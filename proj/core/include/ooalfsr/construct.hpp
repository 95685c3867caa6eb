/**************************************************************************
 * construct.hpp
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

#include <cstdint>
#include <utility>
#include <vector>

#include "ooalfsr/lfsr.hpp"
#include "ooalfsr/ooa.hpp"

namespace ooalfsr {

/**
 * Assignment of the OOA labels [q+1] x [t] to columns of the subinterval
 * array M (indices in Z_k):
 *
 *   (1, j) -> t - j
 *   (2, j) -> t + j - 1
 *   (i, j) -> (t + j k_beta) mod k   for i >= 3, beta the (i-2)-th nonzero
 *                                    element in ascending code order
 *
 * The mod-k reduction makes some block-3+ indices coincide with indices of
 * other blocks. Such labels never share a left-justified set, so the
 * result is still an OOA; collisions() reports them.
 */
struct ColumnMap {
    unsigned t = 0;
    std::uint32_t q = 0;
    /// Column of M for each label, row-major over (block, depth).
    std::vector<std::size_t> columns;
    /// beta per block; 0 for blocks 1 and 2.
    std::vector<Elem> block_beta;

    std::size_t column(const Label& label) const { return columns.at((label.block - 1) * t + label.depth - 1); }
    /// Label pairs mapped to the same column of M.
    std::vector<std::pair<Label, Label>> collisions() const;
};

ColumnMap runs_column_map(const Lfsr& lfsr);

/// RUNS array OOA(t, q+1, t, q): the q^t rows of M restricted to the mapped
/// columns. With `verify`, runs verify_ooa and throws std::logic_error on
/// failure. Requires t >= 3.
OoaArray build_runs_ooa(const Lfsr& lfsr, bool verify = true);

/**
 * RTS array OOA(t, q+1, t, q) in Reed-Solomon s-code form. Rows are the q^t
 * polynomials g with deg g < t, in ascending packed code. Block a (one per
 * field element, ascending) holds the Hasse coefficients of g at a of
 * orders 0..t-1; block q+1 holds the coefficients of x^{t-1}, ..., x^0.
 */
OoaArray build_rts_ooa(const Field& base, unsigned t, bool verify = true);

/// Seed vectors T_j = (Tr(alpha^{v+j} alpha^i))_i for the mapped columns j,
/// where gamma = alpha^v is the seed's trace representative.
struct XSet {
    std::uint64_t v_exponent = 0;
    /// Column of M for each label (row-major), alongside its vector.
    std::vector<std::size_t> columns;
    std::vector<std::vector<Elem>> vectors;

    std::size_t distinct_count() const;
};

XSet x_set(const Lfsr& lfsr);

/// Array whose column for label L is one period of S(f, T_L), plus the zero
/// row. Equal to build_runs_ooa for the same LFSR.
OoaArray array_from_x_set(const Lfsr& lfsr, const XSet& xs);

}  // namespace ooalfsr
