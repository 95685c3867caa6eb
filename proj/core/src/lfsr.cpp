/**************************************************************************
 * lfsr.cpp
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

#include "ooalfsr/lfsr.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ooalfsr {

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 0;
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        auto quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (r != 1) throw std::logic_error("log(alpha) is not invertible; alpha is not primitive");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

Elem find_alpha(const Poly& f, const Subfield& emb) {
    const Field& ext = emb.ext();
    const Field& base = f.field();
    if (base.degree() == 1 && std::equal(f.coeffs().begin(), f.coeffs().end(), ext.modulus().begin(),
                                         ext.modulus().end()))
        return ext.primitive();
    std::vector<Elem> lifted;
    for (auto c : f.coeffs()) lifted.push_back(emb.to_ext(c));
    for (Elem x = 1; x < ext.order(); ++x) {
        Elem acc = 0;
        for (std::size_t i = lifted.size(); i-- > 0;) acc = ext.add(ext.mul(acc, x), lifted[i]);
        if (acc == 0) return x;
    }
    throw std::logic_error("primitive polynomial has no root in F_{q^t}");
}

// Shared precondition of zero_run_polynomial and z_count.
void check_zero_run(const Lfsr& lfsr, const Sequence& seq, std::int64_t n, std::size_t l) {
    const unsigned t = lfsr.degree();
    if (t < 3) throw std::invalid_argument("zero-run polynomial needs t >= 3");
    if (l > t - 3) throw std::invalid_argument("zero-run length must be in [0, t-3]");
    if (l == 0) {
        if (seq[n] == 0) throw std::invalid_argument("l = 0 requires a_n != 0");
        return;
    }
    if (!is_run(seq, n, l, 0)) throw std::invalid_argument("C_n^l is not a run of zeroes of length l");
}

void check_beta(const Lfsr& lfsr, Elem beta) {
    if (beta == 0) throw std::invalid_argument("beta must be nonzero");
    if (!lfsr.base().contains(beta)) throw std::invalid_argument("beta not in F_q");
}

}  // namespace

Lfsr::Lfsr(Poly characteristic, std::vector<Elem> seed) : seed_(std::move(seed)) {
    if (!characteristic.is_monic() || *characteristic.degree() == 0)
        throw std::invalid_argument("characteristic polynomial must be monic of degree >= 1");
    if (!is_primitive_poly(characteristic))
        throw std::invalid_argument("characteristic polynomial " + characteristic.to_string() + " is not primitive");
    const auto t = static_cast<unsigned>(*characteristic.degree());
    const Field& base = characteristic.field();
    Field ext = Field::build(base.characteristic(), base.degree() * t);
    Subfield emb(std::move(ext), base);
    const Elem alpha = find_alpha(characteristic, emb);
    const auto inv = inverse_mod(emb.ext().log(alpha), emb.ext().order() - 1);
    shared_ = std::make_shared<const Shared>(Shared{std::move(characteristic), t, std::move(emb), alpha, inv});
    check_seed();
}

Lfsr::Lfsr(std::shared_ptr<const Shared> shared, std::vector<Elem> seed)
    : shared_(std::move(shared)), seed_(std::move(seed)) {
    check_seed();
}

void Lfsr::check_seed() const {
    if (seed_.size() != shared_->t) throw std::invalid_argument("seed length must equal the degree");
    for (auto b : seed_)
        if (!base().contains(b)) throw std::invalid_argument("seed symbol not in F_q");
    if (std::all_of(seed_.begin(), seed_.end(), [](Elem b) { return b == 0; }))
        throw std::invalid_argument("seed must be nonzero");
}

Lfsr Lfsr::with_impulse_seed(Poly characteristic) {
    const auto t = characteristic.degree().value_or(0);
    std::vector<Elem> seed(t, 0);
    if (t > 0) seed.back() = 1;
    return Lfsr(std::move(characteristic), std::move(seed));
}

Lfsr Lfsr::with_seed(std::vector<Elem> seed) const { return Lfsr(shared_, std::move(seed)); }

std::uint64_t Lfsr::log_alpha(Elem x) const {
    const std::uint64_t m = period();
    return static_cast<std::uint64_t>(ext().log(x)) * shared_->alpha_log_inverse % m;
}

std::vector<Elem> Sequence::subinterval(std::int64_t start, std::size_t len) const {
    std::vector<Elem> out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = (*this)[start + static_cast<std::int64_t>(i)];
    return out;
}

std::string Sequence::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (q_ > 9 && i > 0) os << ' ';
        os << symbols_[i];
    }
    return os.str();
}

Sequence generate_period(const Lfsr& lfsr) {
    const Field& F = lfsr.base();
    const unsigned t = lfsr.degree();
    const auto c = lfsr.taps();
    std::vector<Elem> a(lfsr.seed().begin(), lfsr.seed().end());
    a.reserve(lfsr.period());
    while (a.size() < lfsr.period()) {
        const std::size_t i = a.size();
        Elem acc = 0;
        for (unsigned j = 0; j < t; ++j) acc = F.add(acc, F.mul(c[j], a[i - t + j]));
        a.push_back(F.neg(acc));
    }
    a.resize(lfsr.period());
    return Sequence(std::move(a), F.order());
}

Elem gamma_of_seed(const Lfsr& lfsr) {
    // Tr(alpha^v alpha^i) is the gamma = 1 sequence shifted by v, so v is the
    // unique position of the seed among its windows.
    const Sequence base_seq = generate_by_trace(lfsr, 1);
    const auto t = lfsr.degree();
    const auto seed = lfsr.seed();
    for (std::size_t v = 0; v < base_seq.size(); ++v) {
        bool match = true;
        for (unsigned i = 0; i < t && match; ++i)
            match = base_seq[static_cast<std::int64_t>(v + i)] == seed[i];
        if (match) return lfsr.alpha_pow(static_cast<std::int64_t>(v));
    }
    throw std::logic_error("seed does not occur in the trace sequence");
}

Sequence generate_by_trace(const Lfsr& lfsr, Elem gamma) {
    const Field& ext = lfsr.ext();
    std::vector<Elem> a(lfsr.period());
    Elem x = gamma;
    for (auto& s : a) {
        s = lfsr.embedding().trace(x);
        x = ext.mul(x, lfsr.alpha());
    }
    return Sequence(std::move(a), lfsr.base().order());
}

Sequence generate_by_trace(const Lfsr& lfsr) { return generate_by_trace(lfsr, gamma_of_seed(lfsr)); }

bool is_run(const Sequence& seq, std::int64_t n, std::size_t len, Elem symbol) {
    if (len == 0 || len >= seq.size()) return false;
    if (seq[n - 1] == symbol || seq[n + static_cast<std::int64_t>(len)] == symbol) return false;
    for (std::size_t i = 0; i < len; ++i)
        if (seq[n + static_cast<std::int64_t>(i)] != symbol) return false;
    return true;
}

std::vector<Run> find_runs(const Sequence& seq) {
    const auto n = seq.size();
    std::size_t s = 0;
    while (s < n && seq[static_cast<std::int64_t>(s) - 1] == seq[static_cast<std::int64_t>(s)]) ++s;
    if (s == n) throw std::invalid_argument("find_runs: constant sequence has no runs");

    std::vector<Run> runs;
    std::size_t i = 0;
    while (i < n) {
        const auto start = seq.wrap(static_cast<std::int64_t>(s + i));
        const Elem symbol = seq[static_cast<std::int64_t>(start)];
        std::size_t len = 0;
        while (i < n && seq[static_cast<std::int64_t>(s + i)] == symbol) {
            ++len;
            ++i;
        }
        runs.push_back({start, symbol, len});
    }
    std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) { return a.start < b.start; });
    return runs;
}

RunCensus run_census(const Sequence& seq) {
    RunCensus census;
    for (const auto& r : find_runs(seq)) ++census[{r.symbol, r.length}];
    return census;
}

std::vector<std::string> golomb_run_mismatches(const RunCensus& census, std::uint32_t q, unsigned t) {
    std::vector<std::string> issues;
    auto count = [&](Elem s, std::size_t l) -> std::size_t {
        auto it = census.find({s, l});
        return it == census.end() ? 0 : it->second;
    };
    auto expect = [&](Elem s, std::size_t l, std::uint64_t want) {
        const auto got = count(s, l);
        if (got != want) {
            std::ostringstream os;
            os << "runs of " << s << " with length " << l << ": expected " << want << ", found " << got;
            issues.push_back(os.str());
        }
    };
    for (Elem s = 0; s < q; ++s) {
        for (std::size_t l = 1; l + 2 <= t; ++l) {
            std::uint64_t want = std::uint64_t{q - 1} * (q - 1);
            for (std::size_t e = 0; e + l + 2 < t; ++e) want *= q;
            expect(s, l, want);
        }
        if (t >= 2) expect(s, t - 1, s == 0 ? q - 1 : q - 2);
        expect(s, t, s == 0 ? 0 : 1);
    }
    for (const auto& [key, n] : census) {
        if (key.second > t) {
            std::ostringstream os;
            os << n << " run(s) of " << key.first << " longer than t: length " << key.second;
            issues.push_back(os.str());
        }
    }
    return issues;
}

bool each_nonzero_tuple_once(const Sequence& seq, unsigned t) {
    const std::uint32_t q = seq.alphabet();
    std::uint64_t space = 1;
    for (unsigned i = 0; i < t; ++i) space *= q;
    std::vector<std::uint32_t> hits(space, 0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        std::uint64_t code = 0;
        for (unsigned j = 0; j < t; ++j) code = code * q + seq[static_cast<std::int64_t>(i + j)];
        ++hits[code];
    }
    if (hits[0] != 0) return false;
    return std::all_of(hits.begin() + 1, hits.end(), [](std::uint32_t h) { return h == 1; });
}

std::vector<std::size_t> zero_positions(const Sequence& seq, std::int64_t start, std::size_t window) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < window; ++i)
        if (seq[start + static_cast<std::int64_t>(i)] == 0) out.push_back(i);
    return out;
}

std::uint64_t k_beta(const Lfsr& lfsr, Elem beta) {
    check_beta(lfsr, beta);
    const Field& ext = lfsr.ext();
    const Elem diff = ext.sub(lfsr.alpha(), lfsr.embedding().to_ext(beta));
    const auto m = lfsr.period();
    return (m - lfsr.log_alpha(diff)) % m;
}

std::uint64_t k_beta_in_window(const Lfsr& lfsr, Elem beta) { return k_beta(lfsr, beta) % lfsr.window(); }

bool shift_identity_check(const Lfsr& lfsr, const Sequence& seq, Elem beta) {
    const Field& F = lfsr.base();
    const auto k = static_cast<std::int64_t>(k_beta(lfsr, beta));
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(seq.size()); ++i)
        if (F.sub(seq[i + 1], F.mul(beta, seq[i])) != seq[i - k]) return false;
    return true;
}

Poly zero_run_polynomial(const Lfsr& lfsr, const Sequence& seq, std::int64_t n, std::size_t l) {
    check_zero_run(lfsr, seq, n, l);
    const Field& F = lfsr.base();
    const unsigned t = lfsr.degree();
    const auto& f = lfsr.characteristic();  // f[t] == 1
    std::vector<Elem> coeffs(t - l, 0);
    for (std::size_t j = 0; j + l + 1 <= t; ++j) {
        const Elem c = f[j + l + 1];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= j; ++i) {
            const auto idx = n + static_cast<std::int64_t>(l + j) - static_cast<std::int64_t>(i);
            coeffs[i] = F.add(coeffs[i], F.mul(c, seq[idx]));
        }
    }
    return Poly(F, std::move(coeffs));
}

unsigned z_count(const Lfsr& lfsr, const Sequence& seq, std::int64_t n, std::size_t l, Elem beta) {
    check_zero_run(lfsr, seq, n, l);
    const auto k = static_cast<std::int64_t>(k_beta(lfsr, beta));
    unsigned z = 0;
    while (seq[n + (static_cast<std::int64_t>(z) + 1) * k] == 0) {
        if (++z > lfsr.degree()) throw std::logic_error("z_count: zero chain longer than t");
    }
    return z;
}

Run shrink_run(const Lfsr& lfsr, const Sequence& seq, const Run& run, Elem beta) {
    if (run.length < 2) throw std::invalid_argument("shrink_run needs a run of length >= 2");
    if (!is_run(seq, static_cast<std::int64_t>(run.start), run.length, run.symbol))
        throw std::invalid_argument("shrink_run: not a run of the sequence");
    const Field& F = lfsr.base();
    const auto k = static_cast<std::int64_t>(k_beta(lfsr, beta));
    Run out{seq.wrap(static_cast<std::int64_t>(run.start) - k), F.mul(run.symbol, F.sub(1, beta)),
            run.length - 1};
    if (!is_run(seq, static_cast<std::int64_t>(out.start), out.length, out.symbol))
        throw std::logic_error("shrink_run: counting back k_beta did not give a run");
    return out;
}

std::size_t grow_zero_run(const Lfsr& lfsr, const Sequence& seq, const Run& zero_run, Elem beta) {
    if (zero_run.symbol != 0 || !is_run(seq, static_cast<std::int64_t>(zero_run.start), zero_run.length, 0))
        throw std::invalid_argument("grow_zero_run: not a run of zeroes");
    const Field& F = lfsr.base();
    const auto n = static_cast<std::int64_t>(zero_run.start + k_beta(lfsr, beta));
    Elem expected = seq[n];
    for (std::size_t i = 1; i <= zero_run.length; ++i) {
        expected = F.mul(expected, beta);
        if (seq[n + static_cast<std::int64_t>(i)] != expected)
            throw std::logic_error("grow_zero_run: interval is not a geometric progression");
    }
    return seq.wrap(n);
}

std::vector<std::pair<Run, Run>> run_bijection(const Lfsr& lfsr, const Sequence& seq, std::size_t l) {
    const unsigned t = lfsr.degree();
    if (l < 1 || l + 1 > t) throw std::invalid_argument("run_bijection: l must be in [1, t-1]");
    const auto k1 = static_cast<std::int64_t>(k_beta(lfsr, 1));
    const auto runs = find_runs(seq);

    std::vector<std::pair<Run, Run>> pairs;
    for (const auto& r : runs) {
        if (r.symbol != 0 || r.length != l) continue;
        bool matched = false;
        for (std::size_t j = 1; l + j <= t; ++j) {
            const auto p = static_cast<std::int64_t>(r.start) + static_cast<std::int64_t>(j) * k1;
            const Elem s = seq[p];
            if (!is_run(seq, p, l + j, s))
                throw std::logic_error("run_bijection: shifted interval is not a run");
            if (s != 0) {
                pairs.emplace_back(r, Run{seq.wrap(p), s, l + j});
                matched = true;
                break;
            }
        }
        if (!matched) throw std::logic_error("run_bijection: zero run has no nonzero partner");
    }

    std::set<std::size_t> images;
    for (const auto& pr : pairs) images.insert(pr.second.start);
    std::set<std::size_t> targets;
    for (const auto& r : runs)
        if (r.symbol != 0 && r.length > l) targets.insert(r.start);
    if (images.size() != pairs.size() || images != targets)
        throw std::logic_error("run_bijection: pairing is not a bijection");
    if (l + 1 == t) {
        for (const auto& pr : pairs)
            if (pr.second.length != t) throw std::logic_error("run_bijection: l = t-1 partner not of length t");
    }
    return pairs;
}

SymbolArray subinterval_array(const Lfsr& lfsr, const Sequence& seq) {
    const auto rows = seq.size() + 1;
    const auto k = lfsr.window();
    SymbolArray m(rows, k);
    for (std::size_t i = 0; i + 1 < rows; ++i)
        for (std::size_t c = 0; c < k; ++c) m.at(i, c) = seq[static_cast<std::int64_t>(i + c)];
    return m;
}

SymbolArray subinterval_array(const Lfsr& lfsr) { return subinterval_array(lfsr, generate_period(lfsr)); }

std::vector<Elem> power_coordinates(const Lfsr& lfsr, std::uint64_t e) {
    auto r = x_pow_mod(e, lfsr.characteristic());
    std::vector<Elem> out(lfsr.degree(), 0);
    std::copy(r.coeffs().begin(), r.coeffs().end(), out.begin());
    return out;
}

std::vector<std::vector<Elem>> power_coordinate_table(const Lfsr& lfsr, std::uint64_t count) {
    const Field& F = lfsr.base();
    const unsigned t = lfsr.degree();
    const auto c = lfsr.taps();
    std::vector<std::vector<Elem>> table;
    table.reserve(count);
    std::vector<Elem> v(t, 0);
    v[0] = 1;
    for (std::uint64_t e = 0; e < count; ++e) {
        table.push_back(v);
        const Elem top = v[t - 1];
        for (unsigned i = t - 1; i > 0; --i) v[i] = v[i - 1];
        v[0] = 0;
        for (unsigned i = 0; i < t; ++i) v[i] = F.sub(v[i], F.mul(top, c[i]));
    }
    return table;
}

}  // namespace ooalfsr
