/**************************************************************************
 * poly.cpp
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

#include "ooalfsr/poly.hpp"

#include <charconv>
#include <sstream>

namespace ooalfsr {

namespace {

// Divides f by (x - a) in place; returns the remainder f(a).
Elem synthetic_divide(const Field& F, std::vector<Elem>& coeffs, Elem a) {
    if (coeffs.empty()) return 0;
    Elem carry = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        Elem next = F.add(coeffs[i], F.mul(a, carry));
        coeffs[i] = carry;
        carry = next;
    }
    // coeffs[i] is now the quotient coefficient of x^i; the top slot is 0.
    coeffs.pop_back();
    return carry;
}

std::uint64_t checked_power(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (r > (std::uint64_t{1} << 40) / base) throw std::invalid_argument("q^t too large");
        r *= base;
    }
    return r;
}

}  // namespace

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_)
        if (!field_.contains(c)) throw std::invalid_argument("coefficient not in field");
    trim();
}

Poly Poly::monomial(Field field, Elem c, std::size_t degree) {
    std::vector<Elem> coeffs(degree + 1, 0);
    coeffs[degree] = c;
    return Poly(std::move(field), std::move(coeffs));
}

Poly Poly::linear_root(Field field, Elem a) {
    Elem c0 = field.neg(a);
    return Poly(std::move(field), {c0, 1});
}

std::optional<std::size_t> Poly::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

void Poly::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::check_same_field(const Poly& other) const {
    if (!(field_ == other.field_)) throw std::invalid_argument("polynomials over different fields");
}

Elem Poly::eval(Elem x) const {
    if (!field_.contains(x)) throw std::invalid_argument("evaluation point not in field");
    Elem acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), coeffs_[i]);
    return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
    check_same_field(rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], rhs.coeffs_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    check_same_field(rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], rhs.coeffs_[i]);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    check_same_field(rhs);
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Elem> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], rhs.coeffs_[j]));
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly Poly::scaled(Elem c) const {
    std::vector<Elem> out(coeffs_);
    for (auto& x : out) x = field_.mul(x, c);
    return Poly(field_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    check_same_field(divisor);
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Elem> rem(coeffs_);
    const std::size_t dd = divisor.coeffs_.size() - 1;
    if (rem.size() <= dd) return {Poly(field_), *this};
    std::vector<Elem> quot(rem.size() - dd, 0);
    const Elem lead_inv = field_.inv(divisor.lead());
    for (std::size_t i = rem.size(); i-- > dd;) {
        Elem c = field_.mul(rem[i], lead_inv);
        quot[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[i - dd + j] = field_.sub(rem[i - dd + j], field_.mul(c, divisor.coeffs_[j]));
    }
    rem.resize(dd);
    return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

std::string Poly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
    return os.str();
}

Poly Poly::parse(Field field, std::string_view text) {
    std::vector<Elem> coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        Elem value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("bad polynomial coefficient '" + std::string(token) + "'");
        if (!field.contains(value))
            throw std::invalid_argument("coefficient " + std::to_string(value) + " not in field");
        coeffs.push_back(value);
        pos = comma + 1;
    }
    return Poly(std::move(field), std::move(coeffs));
}

std::vector<Root> roots_with_multiplicity(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
    const Field& F = f.field();
    std::vector<Root> roots;
    for (Elem beta = 0; beta < F.order(); ++beta) {
        std::vector<Elem> work(f.coeffs());
        unsigned mult = 0;
        while (work.size() > 1) {
            auto trial = work;
            if (synthetic_divide(F, trial, beta) != 0) break;
            work = std::move(trial);
            ++mult;
        }
        if (mult > 0) roots.push_back({beta, mult});
    }
    return roots;
}

std::vector<Elem> hasse_coefficients(const Poly& g, Elem a, std::size_t t) {
    if (g.coeffs().size() > t) throw std::invalid_argument("hasse_coefficients: deg g must be < t");
    const Field& F = g.field();
    if (!F.contains(a)) throw std::invalid_argument("shift point not in field");
    std::vector<Elem> out(t, 0);
    std::vector<Elem> work(g.coeffs());
    for (std::size_t j = 0; j < t && !work.empty(); ++j) out[j] = synthetic_divide(F, work, a);
    return out;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b).divmod(m).second; }

Poly x_pow_mod(std::uint64_t e, const Poly& m) {
    const Field& F = m.field();
    Poly result = Poly(F, {1}).divmod(m).second;
    Poly base = Poly::monomial(F, 1, 1).divmod(m).second;
    while (e > 0) {
        if (e & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return result;
}

bool is_primitive_poly(const Poly& f) {
    if (!f.is_monic()) throw std::invalid_argument("is_primitive_poly: polynomial must be monic");
    const auto t = static_cast<unsigned>(*f.degree());
    if (t == 0) throw std::invalid_argument("is_primitive_poly: degree must be >= 1");
    if (f[0] == 0) return false;
    const std::uint64_t order = checked_power(f.field().order(), t) - 1;
    const Poly one(f.field(), {1});
    if (!(x_pow_mod(order, f) == one)) return false;
    for (auto r : prime_factors(order))
        if (x_pow_mod(order / r, f) == one) return false;
    return true;
}

std::vector<Poly> enumerate_primitive_polys(const Field& base, unsigned t) {
    if (t == 0) throw std::invalid_argument("degree must be >= 1");
    const std::uint64_t span = checked_power(base.order(), t);
    std::vector<Poly> out;
    std::vector<Elem> coeffs(t + 1, 0);
    for (std::uint64_t low = 0; low < span; ++low) {
        auto rest = low;
        for (unsigned i = 0; i < t; ++i) {
            coeffs[i] = static_cast<Elem>(rest % base.order());
            rest /= base.order();
        }
        if (coeffs[0] == 0) continue;
        coeffs[t] = 1;
        Poly f(base, coeffs);
        if (is_primitive_poly(f)) out.push_back(std::move(f));
    }
    return out;
}

Poly first_primitive_poly(const Field& base, unsigned t) {
    if (t == 0) throw std::invalid_argument("degree must be >= 1");
    const std::uint64_t span = checked_power(base.order(), t);
    std::vector<Elem> coeffs(t + 1, 0);
    for (std::uint64_t low = 1; low < span; ++low) {
        auto rest = low;
        for (unsigned i = 0; i < t; ++i) {
            coeffs[i] = static_cast<Elem>(rest % base.order());
            rest /= base.order();
        }
        if (coeffs[0] == 0) continue;
        coeffs[t] = 1;
        Poly f(base, coeffs);
        if (is_primitive_poly(f)) return f;
    }
    throw std::logic_error("no primitive polynomial found");
}

}  // namespace ooalfsr
