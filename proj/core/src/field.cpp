/**************************************************************************
 * field.cpp
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

#include "ooalfsr/field.hpp"

#include <algorithm>
#include <string>

namespace ooalfsr {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (auto r : prime_factors(n)) result = result / r * (r - 1);
    return result;
}

PrimePower as_prime_power(std::uint64_t q) {
    auto factors = prime_factors(q);
    if (q < 2 || factors.size() != 1)
        throw std::invalid_argument("not a prime power: " + std::to_string(q));
    std::uint32_t n = 0;
    while (q > 1) {
        q /= factors[0];
        ++n;
    }
    return {static_cast<std::uint32_t>(factors[0]), n};
}

namespace {

// Multiplies the element with digit vector `d` by the modulus root, in place.
void times_root(std::vector<Elem>& d, std::span<const Elem> modulus, std::uint32_t p) {
    const auto n = d.size();
    const Elem top = d[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) d[i] = d[i - 1];
    d[0] = 0;
    if (top == 0) return;
    for (std::size_t i = 0; i < n; ++i) {
        auto sub = static_cast<std::uint64_t>(top) * modulus[i] % p;
        d[i] = static_cast<Elem>((d[i] + p - sub) % p);
    }
}

Elem pack(std::span<const Elem> digits, std::uint32_t p) {
    Elem code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) code = code * p + digits[i];
    return code;
}

std::uint64_t checked_order(std::uint32_t p, std::uint32_t n) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw std::invalid_argument("field order exceeds supported size");
    }
    return q;
}

}  // namespace

std::shared_ptr<const Field::Tables> Field::make_tables(std::uint32_t p, std::vector<Elem> modulus) {
    if (modulus.size() < 2 || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree >= 1");
    const auto n = static_cast<std::uint32_t>(modulus.size() - 1);
    const auto q = checked_order(p, n);
    for (auto c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (modulus[0] == 0) return nullptr;

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->n = n;
    t->q = static_cast<std::uint32_t>(q);
    t->modulus = std::move(modulus);
    t->exp.resize(q - 1);
    t->log.assign(q, 0);

    std::vector<Elem> digits(n, 0);
    digits[0] = 1;
    for (std::uint64_t k = 0; k < q - 1; ++k) {
        Elem code = pack(digits, p);
        if (k > 0 && code == 1) return nullptr;  // root order < q-1
        t->exp[k] = code;
        t->log[code] = static_cast<std::uint32_t>(k);
        times_root(digits, t->modulus, p);
    }
    if (pack(digits, p) != 1) return nullptr;
    return t;
}

Field Field::build(std::uint32_t p, std::uint32_t n) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime: " + std::to_string(p));
    if (n == 0) throw std::invalid_argument("extension degree must be >= 1");
    const auto span = checked_order(p, n);
    std::vector<Elem> modulus(n + 1, 0);
    for (std::uint64_t low = 1; low < span; ++low) {
        auto rest = low;
        for (std::uint32_t i = 0; i < n; ++i) {
            modulus[i] = static_cast<Elem>(rest % p);
            rest /= p;
        }
        modulus[n] = 1;
        if (auto tables = make_tables(p, modulus)) return Field(std::move(tables));
    }
    throw std::logic_error("no primitive modulus found for GF(" + std::to_string(p) + "^" +
                           std::to_string(n) + ")");
}

Field Field::of_order(std::uint64_t q) {
    auto [p, n] = as_prime_power(q);
    return build(p, n);
}

Field Field::with_modulus(std::uint32_t p, std::vector<Elem> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime: " + std::to_string(p));
    auto tables = make_tables(p, std::move(modulus));
    if (!tables) throw std::invalid_argument("modulus is not primitive");
    return Field(std::move(tables));
}

Elem Field::add(Elem a, Elem b) const noexcept {
    const auto p = data_->p;
    if (data_->n == 1) {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    if (p == 2) return a ^ b;
    Elem out = 0, scale = 1;
    while (a != 0 || b != 0) {
        Elem d = a % p + b % p;
        if (d >= p) d -= p;
        out += d * scale;
        scale *= p;
        a /= p;
        b /= p;
    }
    return out;
}

Elem Field::neg(Elem a) const noexcept {
    const auto p = data_->p;
    if (p == 2) return a;
    if (data_->n == 1) return a == 0 ? 0 : p - a;
    Elem out = 0, scale = 1;
    while (a != 0) {
        Elem d = a % p;
        out += (d == 0 ? 0 : p - d) * scale;
        scale *= p;
        a /= p;
    }
    return out;
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
    if (data_->n == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % data_->p);
    if (a == 0 || b == 0) return 0;
    std::uint32_t k = data_->log[a] + data_->log[b];
    const std::uint32_t m = data_->q - 1;
    if (k >= m) k -= m;
    return data_->exp[k];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    const std::uint32_t m = data_->q - 1;
    return data_->exp[(m - data_->log[a]) % m];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::exp(std::int64_t k) const noexcept {
    const std::int64_t m = data_->q - 1;
    k %= m;
    if (k < 0) k += m;
    return data_->exp[static_cast<std::size_t>(k)];
}

Elem Field::pow(Elem a, std::int64_t e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw DivisionByZero("negative power of zero");
        return 0;
    }
    const std::int64_t m = data_->q - 1;
    e %= m;
    if (e < 0) e += m;
    return exp(static_cast<std::int64_t>(data_->log[a]) * e % m);
}

std::uint32_t Field::log(Elem x) const {
    if (x == 0) throw DivisionByZero("discrete log of zero");
    if (x >= data_->q) throw std::out_of_range("element not in field");
    return data_->log[x];
}

std::vector<Elem> Field::digits(Elem x) const {
    std::vector<Elem> out(data_->n);
    for (auto& d : out) {
        d = x % data_->p;
        x /= data_->p;
    }
    return out;
}

Elem Field::from_digits(std::span<const Elem> digits) const { return pack(digits, data_->p); }

bool operator==(const Field& a, const Field& b) noexcept {
    return a.data_ == b.data_ || (a.data_->p == b.data_->p && a.data_->modulus == b.data_->modulus);
}

}  // namespace ooalfsr
