/**************************************************************************
 * subfield.hpp
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

#include <optional>
#include <vector>

#include "ooalfsr/field.hpp"

namespace ooalfsr {

/**
 * Embedding of a field F_q into an extension F_{q^t} of the same
 * characteristic.
 *
 * Both fields keep their own canonical encodings. The embedding sends the
 * modulus root of F_q to the smallest-code root of that modulus inside the
 * extension, which fixes a field isomorphism onto the subfield.
 */
class Subfield {
public:
    Subfield(Field ext, Field base);

    const Field& ext() const noexcept { return ext_; }
    const Field& base() const noexcept { return base_; }
    /// t such that |ext| = |base|^t
    unsigned relative_degree() const noexcept { return degree_; }

    Elem to_ext(Elem b) const { return to_ext_.at(b); }
    /// Code in the base field, or nullopt if x is outside the subfield.
    std::optional<Elem> to_base(Elem x) const;

    /// Tr(x) = x + x^q + ... + x^(q^(t-1)), encoded in the base field.
    Elem trace(Elem x) const;

private:
    Field ext_;
    Field base_;
    unsigned degree_ = 0;
    std::vector<Elem> to_ext_;
    std::vector<std::int64_t> to_base_;  // -1 outside the subfield
};

/// Trace from `ext` down to its subfield of order base_q, re-encoded in the
/// canonical field of order base_q. Throws if |ext| is not a power of base_q.
Elem trace_to_base(const Field& ext, std::uint32_t base_q, Elem x);

}  // namespace ooalfsr
