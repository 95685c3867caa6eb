/**************************************************************************
 * ooa.cpp
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

#include "ooalfsr/ooa.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ooalfsr/combinatorics.hpp"

namespace ooalfsr {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::string to_string(const Label& label) {
    return "(" + std::to_string(label.block) + "," + std::to_string(label.depth) + ")";
}

namespace {

std::uint64_t power(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

OoaArray::OoaArray(OoaParams params, SymbolArray symbols) : params_(params), symbols_(std::move(symbols)) {
    if (params_.t < 1 || params_.m < 1 || params_.s < 1 || params_.v < 2 || params_.lambda < 1)
        throw std::invalid_argument("OOA parameters must be positive (v >= 2)");
    if (params_.t > params_.m * params_.s) throw std::invalid_argument("OOA strength exceeds column count");
    if (symbols_.cols() != std::size_t{params_.m} * params_.s)
        throw std::invalid_argument("OOA column count must be m*s");
    if (symbols_.rows() != params_.lambda * power(params_.v, params_.t))
        throw std::invalid_argument("OOA row count must be lambda * v^t");
    if (symbols_.rows() > 0 && symbols_.max_symbol() >= params_.v)
        throw std::invalid_argument("OOA symbol out of range");
}

std::size_t OoaArray::column_of(const Label& label) const {
    if (label.block < 1 || label.block > params_.m || label.depth < 1 || label.depth > params_.s)
        throw std::out_of_range("label " + to_string(label) + " out of range");
    return std::size_t{label.block - 1} * params_.s + (label.depth - 1);
}

Label OoaArray::label_of(std::size_t col) const {
    if (col >= cols()) throw std::out_of_range("column out of range");
    return {static_cast<unsigned>(col / params_.s) + 1, static_cast<unsigned>(col % params_.s) + 1};
}

std::vector<Label> OoaArray::labels() const {
    std::vector<Label> out;
    for (std::size_t c = 0; c < cols(); ++c) out.push_back(label_of(c));
    return out;
}

std::string CoverageReport::summary() const {
    std::ostringstream os;
    os << "covered=" << covered << " total=" << total << " ratio=" << std::fixed << std::setprecision(6) << ratio();
    return os.str();
}

std::vector<std::vector<Label>> left_justified_sets(unsigned m, unsigned s, unsigned t) {
    std::vector<std::vector<Label>> out;
    std::vector<unsigned> depth(m, 0);
    // Enumerate prefix-length vectors with sum t, lexicographically.
    auto recurse = [&](auto&& self, unsigned block, unsigned remaining) -> void {
        if (block == m) {
            if (remaining != 0) return;
            std::vector<Label> set;
            for (unsigned i = 0; i < m; ++i)
                for (unsigned j = 1; j <= depth[i]; ++j) set.push_back({i + 1, j});
            out.push_back(std::move(set));
            return;
        }
        for (unsigned d = 0; d <= std::min(s, remaining); ++d) {
            depth[block] = d;
            self(self, block + 1, remaining - d);
        }
        depth[block] = 0;
    };
    recurse(recurse, 0, t);
    return out;
}

bool is_lambda_covered(const SymbolArray& array, std::uint32_t v, std::span<const std::size_t> cols,
                       std::uint64_t lambda) {
    const auto tuples = power(v, static_cast<unsigned>(cols.size()));
    if (array.rows() != lambda * tuples) throw std::invalid_argument("is_lambda_covered: row count != lambda v^t");
    std::vector<std::uint64_t> counts(tuples, 0);
    for (std::size_t r = 0; r < array.rows(); ++r) {
        std::uint64_t code = 0;
        for (auto c : cols) code = code * v + array.at(r, c);
        if (++counts[code] > lambda) return false;
    }
    return true;
}

bool is_lambda_covered(const OoaArray& array, std::span<const Label> cols, std::uint64_t lambda) {
    std::vector<std::size_t> idx;
    for (const auto& l : cols) idx.push_back(array.column_of(l));
    return is_lambda_covered(array.symbols(), array.params().v, idx, lambda);
}

CoverageReport verify_ooa(const OoaArray& array) {
    const auto& p = array.params();
    CoverageReport report;
    for (const auto& set : left_justified_sets(p.m, p.s, p.t)) {
        std::vector<std::size_t> idx;
        for (const auto& l : set) idx.push_back(array.column_of(l));
        ++report.total;
        if (is_lambda_covered(array.symbols(), p.v, idx, p.lambda))
            ++report.covered;
        else
            report.failures.push_back(std::move(idx));
    }
    return report;
}

GeneratorMatrix::GeneratorMatrix(Field F, std::vector<Vector> rows) : F_(std::move(F)), rows_(std::move(rows)) {
    const std::size_t cols = rows_.empty() ? 0 : rows_[0].size();
    columns_.assign(cols, Vector(rows_.size(), 0));
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) columns_[c][r] = rows_[r][c];
}

std::optional<GeneratorMatrix> GeneratorMatrix::of(const SymbolArray& array, const Field& F) {
    EchelonBasis basis(F, array.cols());
    std::set<std::vector<Elem>> distinct;
    for (std::size_t r = 0; r < array.rows(); ++r) {
        Vector row(array.row(r).begin(), array.row(r).end());
        for (auto x : row)
            if (!F.contains(x)) return std::nullopt;
        if (!distinct.insert(row).second) return std::nullopt;
        basis.insert(std::move(row));
    }
    if (array.rows() != power(F.order(), static_cast<unsigned>(basis.dimension()))) return std::nullopt;
    return GeneratorMatrix(F, basis.rows());
}

bool GeneratorMatrix::covers(std::span<const std::size_t> cols) const {
    std::vector<Vector> m;
    m.reserve(cols.size());
    for (auto c : cols) m.push_back(columns_.at(c));
    return rank(F_, std::move(m)) == cols.size();
}

bool covered_iff_rank(const Field& F, std::span<const Vector> generator_columns) {
    return linearly_independent(F, generator_columns);
}

CoverageReport coverage_ratio(const OoaArray& array, CensusMethod method) {
    const auto& p = array.params();
    CoverageReport report;
    report.total = binomial(array.cols(), p.t);
    if (method == CensusMethod::brute_force) {
        for_each_combination(array.cols(), p.t, [&](std::span<const std::size_t> cols) {
            if (is_lambda_covered(array.symbols(), p.v, cols, p.lambda)) ++report.covered;
            return true;
        });
        return report;
    }
    const Field F = Field::of_order(p.v);
    auto gen = GeneratorMatrix::of(array.symbols(), F);
    if (!gen) throw std::invalid_argument("rank census needs a linear array; use the brute-force census");
    if (gen->dimension() < p.t) return report;
    for_each_combination(array.cols(), p.t, [&](std::span<const std::size_t> cols) {
        if (gen->covers(cols)) ++report.covered;
        return true;
    });
    return report;
}

ColumnBounds max_columns_bound(unsigned q, unsigned t) {
    if (t < 2) throw std::invalid_argument("max_columns_bound: t must be >= 2");
    ColumnBounds b{};
    if (q <= t)
        b.oa_bound = t + 1;
    else if (t >= 3 && q % 2 == 1)
        b.oa_bound = q + t - 2;
    else
        b.oa_bound = q + t - 1;
    b.ntset_m_bound = q / (t / 2) + 1;
    return b;
}

unsigned ntset_ooa_columns(unsigned n, unsigned t) {
    if (t < 2) throw std::invalid_argument("ntset_ooa_columns: t must be >= 2");
    const unsigned h = t / 2;
    if (t % 2 == 1) return n == 0 ? 0 : (n - 1) / h;
    return n / h;
}

}  // namespace ooalfsr
