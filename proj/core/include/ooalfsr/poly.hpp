/**************************************************************************
 * poly.hpp
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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ooalfsr/field.hpp"

namespace ooalfsr {

/// Polynomial over a finite field, coefficients constant term first.
///
/// Always trimmed: the last stored coefficient is nonzero, and the zero
/// polynomial stores nothing (its degree is std::nullopt).
class Poly {
public:
    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<Elem> coeffs);

    static Poly monomial(Field field, Elem c, std::size_t degree);
    /// x - a
    static Poly linear_root(Field field, Elem a);

    const Field& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    std::optional<std::size_t> degree() const noexcept;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    Elem lead() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    /// Coefficient of x^i (0 past the degree).
    Elem operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

    /// Horner evaluation. Throws std::invalid_argument if x is not in the field.
    Elem eval(Elem x) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    Poly scaled(Elem c) const;

    /// Quotient and remainder; throws DivisionByZero for a zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    /// Comma-separated codes, constant term first ("1,1,0,0,1"). The zero
    /// polynomial prints as "0".
    std::string to_string() const;
    static Poly parse(Field field, std::string_view text);

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

private:
    void trim() noexcept;
    void check_same_field(const Poly& other) const;

    Field field_;
    std::vector<Elem> coeffs_;
};

struct Root {
    Elem value;
    unsigned multiplicity;
    friend bool operator==(const Root&, const Root&) = default;
};

/// Roots of f in its coefficient field, ascending by code, each with the
/// largest e such that (x - root)^e divides f.
std::vector<Root> roots_with_multiplicity(const Poly& f);

/// Coefficients of g(x + a) in ascending powers, padded to length t. These
/// are the Hasse derivatives of g of orders 0..t-1 evaluated at a.
std::vector<Elem> hasse_coefficients(const Poly& g, Elem a, std::size_t t);

/// (a * b) mod m
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
/// x^e mod m
Poly x_pow_mod(std::uint64_t e, const Poly& m);

/// True iff f (monic, degree >= 1) is primitive over its coefficient field:
/// x has multiplicative order q^t - 1 modulo f. Throws for non-monic f.
bool is_primitive_poly(const Poly& f);

/// All monic primitive polynomials of degree t over `base`, ascending by
/// packed code sum c_i q^i.
std::vector<Poly> enumerate_primitive_polys(const Field& base, unsigned t);

/// Smallest monic primitive polynomial of degree t over `base`.
Poly first_primitive_poly(const Field& base, unsigned t);

}  // namespace ooalfsr
