/**************************************************************************
 * lfsr.hpp
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
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ooalfsr/array.hpp"
#include "ooalfsr/field.hpp"
#include "ooalfsr/poly.hpp"
#include "ooalfsr/subfield.hpp"

namespace ooalfsr {

/**
 * A maximum-period LFSR over F_q: a primitive characteristic polynomial
 * f(x) = c_0 + c_1 x + ... + c_{t-1} x^{t-1} + x^t and a nonzero seed
 * (b_0, ..., b_{t-1}).
 *
 * Also carries F_{q^t} (the canonical field of that order) and the root
 * alpha of f used for discrete logs. When F_q is a prime field and f is
 * the canonical modulus of F_{q^t}, alpha is the modulus root itself;
 * otherwise it is the smallest-code root of f.
 */
class Lfsr {
public:
    Lfsr(Poly characteristic, std::vector<Elem> seed);

    /// Seed (0, ..., 0, 1).
    static Lfsr with_impulse_seed(Poly characteristic);
    /// Same polynomial (and shared extension data), different seed.
    Lfsr with_seed(std::vector<Elem> seed) const;

    const Poly& characteristic() const noexcept { return shared_->f; }
    const Field& base() const noexcept { return shared_->f.field(); }
    unsigned degree() const noexcept { return shared_->t; }
    /// c_0 .. c_{t-1}
    std::span<const Elem> taps() const noexcept { return {shared_->f.coeffs().data(), shared_->t}; }
    std::span<const Elem> seed() const noexcept { return seed_; }

    const Field& ext() const noexcept { return shared_->embedding.ext(); }
    const Subfield& embedding() const noexcept { return shared_->embedding; }
    Elem alpha() const noexcept { return shared_->alpha; }

    /// q^t - 1
    std::uint64_t period() const noexcept { return ext().order() - 1; }
    /// k = (q^t - 1) / (q - 1)
    std::uint64_t window() const noexcept { return period() / (base().order() - 1); }

    /// e in [0, q^t - 1) with alpha^e = x. Throws DivisionByZero for 0.
    std::uint64_t log_alpha(Elem x) const;
    Elem alpha_pow(std::int64_t e) const { return ext().pow(alpha(), e); }

private:
    struct Shared {
        Poly f;
        unsigned t;
        Subfield embedding;
        Elem alpha;
        std::uint64_t alpha_log_inverse;  // inverse of log(alpha) mod q^t - 1
    };

    Lfsr(std::shared_ptr<const Shared> shared, std::vector<Elem> seed);
    void check_seed() const;

    std::shared_ptr<const Shared> shared_;
    std::vector<Elem> seed_;
};

/// One full period of an LFSR sequence; indexing is cyclic.
class Sequence {
public:
    Sequence(std::vector<Elem> symbols, std::uint32_t q) : symbols_(std::move(symbols)), q_(q) {}

    std::size_t size() const noexcept { return symbols_.size(); }
    std::uint32_t alphabet() const noexcept { return q_; }
    std::span<const Elem> symbols() const noexcept { return symbols_; }

    std::size_t wrap(std::int64_t i) const noexcept {
        const auto n = static_cast<std::int64_t>(symbols_.size());
        auto r = i % n;
        return static_cast<std::size_t>(r < 0 ? r + n : r);
    }
    Elem operator[](std::int64_t i) const noexcept { return symbols_[wrap(i)]; }

    /// C_i^len: the len symbols starting at cyclic position i.
    std::vector<Elem> subinterval(std::int64_t start, std::size_t len) const;

    /// Concatenated digits when q <= 9, space-separated codes otherwise.
    std::string to_string() const;

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    std::vector<Elem> symbols_;
    std::uint32_t q_;
};

/// A maximal constant cyclic subinterval.
struct Run {
    std::size_t start;
    Elem symbol;
    std::size_t length;
    friend bool operator==(const Run&, const Run&) = default;
};

/// Recurrence a_i = -sum c_j a_{i-t+j}, one period.
Sequence generate_period(const Lfsr& lfsr);

/// The unique gamma in F_{q^t} with b_i = Tr(gamma alpha^i), 0 <= i < t.
Elem gamma_of_seed(const Lfsr& lfsr);

/// a_i = Tr(gamma alpha^i) with gamma from gamma_of_seed.
Sequence generate_by_trace(const Lfsr& lfsr);
Sequence generate_by_trace(const Lfsr& lfsr, Elem gamma);

/// All runs, ordered by start. Runs crossing the end of the period are
/// merged and reported with their start in [0, period).
std::vector<Run> find_runs(const Sequence& seq);

/// True iff C_n^len is a run of `symbol`s of length exactly len.
bool is_run(const Sequence& seq, std::int64_t n, std::size_t len, Elem symbol);

/// Run counts keyed by (symbol, length).
using RunCensus = std::map<std::pair<Elem, std::size_t>, std::size_t>;
RunCensus run_census(const Sequence& seq);

/// Human-readable descriptions of every deviation of `census` from the
/// run counts of an m-sequence of degree t over F_q; empty when they all hold.
std::vector<std::string> golomb_run_mismatches(const RunCensus& census, std::uint32_t q, unsigned t);

/// True iff each nonzero t-tuple occurs exactly once as t consecutive
/// (cyclic) symbols.
bool each_nonzero_tuple_once(const Sequence& seq, unsigned t);

/// Offsets of the zeroes of C_start^window, relative to start.
std::vector<std::size_t> zero_positions(const Sequence& seq, std::int64_t start, std::size_t window);

/// k_beta with alpha^{k_beta} (alpha - beta) = 1, in Z_{q^t-1}.
std::uint64_t k_beta(const Lfsr& lfsr, Elem beta);
/// k_beta reduced modulo the window length k.
std::uint64_t k_beta_in_window(const Lfsr& lfsr, Elem beta);

/// Checks a_{i+1} - beta a_i = a_{i-k_beta} at every cyclic index.
bool shift_identity_check(const Lfsr& lfsr, const Sequence& seq, Elem beta);

/**
 * Polynomial attached to the zero run C_n^l (l in [0, t-3]):
 *
 *   P(x) = sum_{j=0}^{t-l-1} c_{j+l+1} sum_{i=0}^{j} a_{n+l+j-i} x^i,  c_t = 1.
 *
 * For l >= 1, C_n^l must be a run of zeroes of length l. For l = 0 the
 * caller asserts a_n != 0 (the empty run in front of a nonzero symbol);
 * the a_n = 0 case is rejected. Throws std::invalid_argument otherwise.
 */
Poly zero_run_polynomial(const Lfsr& lfsr, const Sequence& seq, std::int64_t n, std::size_t l);

/// Largest z with a_{n + j k_beta} = 0 for j = 1..z, by direct scan. Same
/// preconditions as zero_run_polynomial.
unsigned z_count(const Lfsr& lfsr, const Sequence& seq, std::int64_t n, std::size_t l, Elem beta);

/// Counting back k_beta from a run of delta's of length l >= 2 gives a run
/// of delta(1 - beta)'s of length l - 1. Throws std::logic_error if the
/// sequence disagrees.
Run shrink_run(const Lfsr& lfsr, const Sequence& seq, const Run& run, Elem beta);

/// Given the zero run C_m^{l-1}, returns the start n = m + k_beta of the
/// interval C_n^l = (a_n, beta a_n, ..., beta^{l-1} a_n), after checking
/// that shape. Throws std::logic_error on mismatch.
std::size_t grow_zero_run(const Lfsr& lfsr, const Sequence& seq, const Run& zero_run, Elem beta);

/// Pairs each zero run of length l (1 <= l <= t-1) with the nonzero run of
/// length l' > l starting (l' - l) k_1 positions later. Throws
/// std::logic_error if the pairing is not a bijection.
std::vector<std::pair<Run, Run>> run_bijection(const Lfsr& lfsr, const Sequence& seq, std::size_t l);

/// q^t x k array: row i < q^t - 1 is C_i^k of the sequence, last row zero.
SymbolArray subinterval_array(const Lfsr& lfsr);
SymbolArray subinterval_array(const Lfsr& lfsr, const Sequence& seq);

/// Coordinates of alpha^e over F_q in the basis 1, alpha, ..., alpha^{t-1},
/// computed as x^e mod f.
std::vector<Elem> power_coordinates(const Lfsr& lfsr, std::uint64_t e);

/// power_coordinates for e = 0 .. count-1.
std::vector<std::vector<Elem>> power_coordinate_table(const Lfsr& lfsr, std::uint64_t count);

}  // namespace ooalfsr
