/**************************************************************************
 * fixtures.hpp
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

#include <string>
#include <vector>

#include "ooalfsr/array.hpp"
#include "ooalfsr/lfsr.hpp"
#include "ooalfsr/ooa.hpp"

namespace fixtures {

// A binary OOA(3,3,2,2) with 8 rows.
inline ooalfsr::OoaArray ooa_3322() {
    const std::vector<std::string> rows{"001111", "101100", "111010", "110101",
                                        "011001", "100011", "010110", "000000"};
    ooalfsr::SymbolArray a(8, 6);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 6; ++c) a.at(r, c) = static_cast<ooalfsr::Elem>(rows[r][c] - '0');
    return ooalfsr::OoaArray({3, 3, 2, 2, 1}, a);
}

inline ooalfsr::Lfsr lfsr(std::uint32_t q, const std::vector<ooalfsr::Elem>& f, const std::vector<ooalfsr::Elem>& seed) {
    return ooalfsr::Lfsr(ooalfsr::Poly(ooalfsr::Field::of_order(q), f), seed);
}

// 1 + x + x^4 over F_2, seed 0001.
inline ooalfsr::Lfsr binary4() { return lfsr(2, {1, 1, 0, 0, 1}, {0, 0, 0, 1}); }
// 2 + 2x + x^4 over F_3, seed 1000.
inline ooalfsr::Lfsr ternary4() { return lfsr(3, {2, 2, 0, 0, 1}, {1, 0, 0, 0}); }
// 1 + 2x + x^3 over F_3, seed 100.
inline ooalfsr::Lfsr ternary3() { return lfsr(3, {1, 2, 0, 1}, {1, 0, 0}); }

inline const char* kBinary4Period = "000100110101111";
inline const char* kTernary3Period = "10020212210222001012112011";
inline const char* kTernary4Period =
    "1000100110121100210201221010111122201121"
    "2000200220212200120102112020222211102212";

// (q, t) pairs whose polynomials are all swept by the exhaustive suites.
inline const std::vector<std::pair<std::uint32_t, unsigned>> kSmallPairs{
    {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {3, 5}, {5, 3}};

}  // namespace fixtures
