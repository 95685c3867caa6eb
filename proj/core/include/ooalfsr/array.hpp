/**************************************************************************
 * array.hpp
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
#include <stdexcept>
#include <vector>

#include "ooalfsr/field.hpp"

namespace ooalfsr {

/// Dense row-major matrix of symbol codes.
class SymbolArray {
public:
    SymbolArray() = default;
    SymbolArray(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    SymbolArray(std::size_t rows, std::size_t cols, std::vector<Elem> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw std::invalid_argument("SymbolArray: data size mismatch");
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Elem& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::vector<Elem> column(std::size_t c) const;
    const std::vector<Elem>& data() const noexcept { return data_; }

    /// New array whose column i is column cols[i] of this one.
    SymbolArray select_columns(std::span<const std::size_t> cols) const;

    Elem max_symbol() const noexcept;

    friend bool operator==(const SymbolArray&, const SymbolArray&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

inline std::vector<Elem> SymbolArray::column(std::size_t c) const {
    std::vector<Elem> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

inline SymbolArray SymbolArray::select_columns(std::span<const std::size_t> cols) const {
    SymbolArray out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (cols[i] >= cols_) throw std::out_of_range("select_columns: column out of range");
            out.at(r, i) = at(r, cols[i]);
        }
    return out;
}

inline Elem SymbolArray::max_symbol() const noexcept {
    Elem m = 0;
    for (auto x : data_) m = x > m ? x : m;
    return m;
}

}  // namespace ooalfsr
