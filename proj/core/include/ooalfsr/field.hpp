/**************************************************************************
 * field.hpp
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
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace ooalfsr {

/// Element of a finite field, stored as its integer code.
///
/// The base-p digits of the code are the coefficients of the element in the
/// power basis 1, w, w^2, ... of the field's modulus root w. Code 0 is the
/// additive identity and code 1 the multiplicative identity.
using Elem = std::uint32_t;

/// Largest field order accepted by Field::build.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 22;

/// Thrown for inv(0), log(0) and friends.
class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

bool is_prime(std::uint64_t n);

/// Distinct prime factors of n in ascending order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Euler's totient by trial division.
std::uint64_t euler_phi(std::uint64_t n);

/// Returns (p, n) with p^n == q, or throws std::invalid_argument.
struct PrimePower {
    std::uint32_t p;
    std::uint32_t n;
};
PrimePower as_prime_power(std::uint64_t q);

/**
 * GF(p^n) with a primitive modulus.
 *
 * Immutable after construction and cheap to copy: copies share the same
 * power/log tables. Prime fields use plain modular arithmetic for add and
 * mul; extension fields multiply through the tables.
 */
class Field {
public:
    /// Canonical field: the modulus is the smallest monic primitive
    /// polynomial of degree n over F_p, ordered by its packed code
    /// sum c_i p^i.
    static Field build(std::uint32_t p, std::uint32_t n);

    /// Canonical field of order q (q must be a prime power).
    static Field of_order(std::uint64_t q);

    /// Field with an explicit monic modulus (constant term first). The
    /// modulus must be primitive over F_p.
    static Field with_modulus(std::uint32_t p, std::vector<Elem> modulus);

    std::uint32_t characteristic() const noexcept { return data_->p; }
    std::uint32_t degree() const noexcept { return data_->n; }
    std::uint32_t order() const noexcept { return data_->q; }
    std::span<const Elem> modulus() const noexcept { return data_->modulus; }

    bool contains(Elem x) const noexcept { return x < data_->q; }

    /// The modulus root, a generator of the multiplicative group.
    Elem primitive() const noexcept { return data_->exp[1 % (data_->q - 1)]; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    /// a^e; negative exponents are allowed for nonzero a.
    Elem pow(Elem a, std::int64_t e) const;

    /// primitive()^k, k taken mod q-1.
    Elem exp(std::int64_t k) const noexcept;
    /// Discrete log to base primitive(), in [0, q-1). Throws for 0.
    std::uint32_t log(Elem x) const;

    /// Base-p digits of x, length degree().
    std::vector<Elem> digits(Elem x) const;
    Elem from_digits(std::span<const Elem> digits) const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

private:
    struct Tables {
        std::uint32_t p = 0;
        std::uint32_t n = 0;
        std::uint32_t q = 0;
        std::vector<Elem> modulus;
        std::vector<Elem> exp;           // size q-1
        std::vector<std::uint32_t> log;  // size q, log[0] unused
    };

    explicit Field(std::shared_ptr<const Tables> data) : data_(std::move(data)) {}
    static std::shared_ptr<const Tables> make_tables(std::uint32_t p, std::vector<Elem> modulus);

    std::shared_ptr<const Tables> data_;
};

}  // namespace ooalfsr
