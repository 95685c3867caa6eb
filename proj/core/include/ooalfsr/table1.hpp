/**************************************************************************
 * table1.hpp
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
#include <string>
#include <vector>

#include "ooalfsr/field.hpp"

namespace ooalfsr {

/// Coverage census over all t-sets of columns for every RUNS array of
/// degree t over F_q, plus the RTS array.
struct Table1Row {
    unsigned t = 0;
    std::uint32_t q = 0;
    std::size_t count_f = 0;
    /// Covered t-sets per primitive polynomial, in enumeration order.
    std::vector<std::uint64_t> runs_covered;
    std::uint64_t rts_covered = 0;
    std::uint64_t total = 0;

    std::uint64_t runs_min_covered() const;
    std::uint64_t runs_max_covered() const;
    double runs_min() const { return static_cast<double>(runs_min_covered()) / total; }
    double runs_max() const { return static_cast<double>(runs_max_covered()) / total; }
    /// Unweighted mean over polynomials.
    double runs_avg() const;
    double rts() const { return static_cast<double>(rts_covered) / total; }
};

/// `threads` = 0 uses the hardware concurrency.
Table1Row table1_stats(std::uint32_t q, unsigned t, unsigned threads = 0);

/// "#f=<n> min=<r> max=<r> avg=<r> rts=<r>", ratios to 6 decimals.
std::string format_table1(const Table1Row& row);

}  // namespace ooalfsr
