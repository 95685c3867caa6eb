/**************************************************************************
 * subfield.cpp
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

#include "ooalfsr/subfield.hpp"

#include <stdexcept>

namespace ooalfsr {

Subfield::Subfield(Field ext, Field base) : ext_(std::move(ext)), base_(std::move(base)) {
    if (ext_.characteristic() != base_.characteristic() || ext_.degree() % base_.degree() != 0)
        throw std::invalid_argument("base field is not a subfield of the extension");
    degree_ = ext_.degree() / base_.degree();

    // Root of the base modulus inside ext; coefficients are prime-field
    // digits, which have the same code in every field of characteristic p.
    const auto modulus = base_.modulus();
    std::optional<Elem> root;
    for (Elem x = 0; x < ext_.order() && !root; ++x) {
        Elem acc = 0;
        for (std::size_t i = modulus.size(); i-- > 0;) acc = ext_.add(ext_.mul(acc, x), modulus[i]);
        if (acc == 0) root = x;
    }
    if (!root) throw std::logic_error("base modulus has no root in the extension");

    to_ext_.resize(base_.order());
    to_base_.assign(ext_.order(), -1);
    for (Elem b = 0; b < base_.order(); ++b) {
        const auto digits = base_.digits(b);
        Elem acc = 0;
        for (std::size_t i = digits.size(); i-- > 0;) acc = ext_.add(ext_.mul(acc, *root), digits[i]);
        to_ext_[b] = acc;
        to_base_[acc] = b;
    }
}

std::optional<Elem> Subfield::to_base(Elem x) const {
    if (!ext_.contains(x)) throw std::out_of_range("element not in extension field");
    auto b = to_base_[x];
    if (b < 0) return std::nullopt;
    return static_cast<Elem>(b);
}

Elem Subfield::trace(Elem x) const {
    if (!ext_.contains(x)) throw std::out_of_range("element not in extension field");
    Elem sum = 0, term = x;
    for (unsigned i = 0; i < degree_; ++i) {
        sum = ext_.add(sum, term);
        term = ext_.pow(term, base_.order());
    }
    auto b = to_base(sum);
    if (!b) throw std::logic_error("trace left the subfield");
    return *b;
}

Elem trace_to_base(const Field& ext, std::uint32_t base_q, Elem x) {
    const auto [p, n] = as_prime_power(base_q);
    if (p != ext.characteristic() || ext.degree() % n != 0)
        throw std::invalid_argument("extension order is not a power of the base order");
    return Subfield(ext, Field::build(p, n)).trace(x);
}

}  // namespace ooalfsr
