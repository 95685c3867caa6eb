/**************************************************************************
 * ooa.hpp
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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ooalfsr/array.hpp"
#include "ooalfsr/field.hpp"
#include "ooalfsr/linalg.hpp"

namespace ooalfsr {

/// Column label (i, j): block i in [1, m], depth j in [1, s].
struct Label {
    unsigned block;
    unsigned depth;
    friend auto operator<=>(const Label&, const Label&) = default;
};

std::string to_string(const Label& label);

struct OoaParams {
    unsigned t;            // strength
    unsigned m;            // blocks
    unsigned s;            // depth
    std::uint32_t v;       // alphabet size
    std::uint64_t lambda;  // index
    friend bool operator==(const OoaParams&, const OoaParams&) = default;
};

/**
 * An N x ms array with columns labelled (1,1), ..., (1,s), (2,1), ...,
 * (m,s) in row-major order, and declared parameters with N = lambda v^t.
 * Construction checks the row count and symbol range only; whether the
 * array really is an OOA is the job of verify_ooa.
 */
class OoaArray {
public:
    OoaArray(OoaParams params, SymbolArray symbols);

    const OoaParams& params() const noexcept { return params_; }
    const SymbolArray& symbols() const noexcept { return symbols_; }
    std::size_t rows() const noexcept { return symbols_.rows(); }
    std::size_t cols() const noexcept { return symbols_.cols(); }

    std::size_t column_of(const Label& label) const;
    Label label_of(std::size_t col) const;
    std::vector<Label> labels() const;

    friend bool operator==(const OoaArray&, const OoaArray&) = default;

private:
    OoaParams params_;
    SymbolArray symbols_;
};

/// Result of verification (left-justified sets) or census (all t-sets).
struct CoverageReport {
    std::uint64_t total = 0;
    std::uint64_t covered = 0;
    /// Uncovered column sets (column indices), filled in verification mode.
    std::vector<std::vector<std::size_t>> failures;

    bool passed() const noexcept { return covered == total; }
    double ratio() const noexcept { return total == 0 ? 1.0 : static_cast<double>(covered) / total; }
    /// "covered=<c> total=<T> ratio=<6dp>"
    std::string summary() const;
};

/// Left-justified t-subsets of [m] x [s]: one per choice of prefix lengths
/// d_1 + ... + d_m = t with 0 <= d_i <= s. Labels in each set are sorted.
std::vector<std::vector<Label>> left_justified_sets(unsigned m, unsigned s, unsigned t);

/// Brute force: every tuple over [0, v)^|cols| occurs exactly lambda times
/// among the rows restricted to cols. Throws if rows != lambda v^|cols|.
bool is_lambda_covered(const SymbolArray& array, std::uint32_t v, std::span<const std::size_t> cols,
                       std::uint64_t lambda);
bool is_lambda_covered(const OoaArray& array, std::span<const Label> cols, std::uint64_t lambda);

/// Checks every left-justified t-set; failures lists the uncovered ones.
CoverageReport verify_ooa(const OoaArray& array);

enum class CensusMethod { brute_force, rank };

/**
 * Counts covered t-sets among all C(ms, t) column subsets.
 *
 * brute_force counts tuples directly. rank requires a linear array over the
 * canonical field of order v (rows forming a subspace) and throws
 * std::invalid_argument otherwise; a t-set is covered iff the matching
 * generator-matrix columns have rank t.
 */
CoverageReport coverage_ratio(const OoaArray& array, CensusMethod method = CensusMethod::brute_force);

/// Row-space generator of a linear array: d x cols over F with v^d rows.
class GeneratorMatrix {
public:
    /// nullopt unless the rows of `array` are exactly a subspace of F^cols.
    static std::optional<GeneratorMatrix> of(const SymbolArray& array, const Field& F);

    const Field& field() const noexcept { return F_; }
    std::size_t dimension() const noexcept { return rows_.size(); }
    /// Column c as a vector of length dimension().
    const Vector& column(std::size_t c) const { return columns_.at(c); }
    /// True iff the columns have full rank t (equivalently, covered).
    bool covers(std::span<const std::size_t> cols) const;

private:
    GeneratorMatrix(Field F, std::vector<Vector> rows);

    Field F_;
    std::vector<Vector> rows_;
    std::vector<Vector> columns_;
};

/// True iff the given t vectors of F_q^t have rank t.
bool covered_iff_rank(const Field& F, std::span<const Vector> generator_columns);

struct ColumnBounds {
    unsigned oa_bound;       // max columns of an OA(q^t; t, n, q)
    unsigned ntset_m_bound;  // max m of a linear OOA(q^t; t, m, t, q) from an (n,t)-set
};

/// Classical OA column bound and the induced bound on m for OOAs built from
/// (n,t)-sets with u = 0. Requires t >= 2.
ColumnBounds max_columns_bound(unsigned q, unsigned t);

/// Number of blocks m obtained from an (n,t)-set: floor((n-1)/h) for
/// t = 2h+1 and floor(n/h) for t = 2h.
unsigned ntset_ooa_columns(unsigned n, unsigned t);

}  // namespace ooalfsr
