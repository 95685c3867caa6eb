/**************************************************************************
 * runs_test.cpp
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

#include <gtest/gtest.h>

#include <map>

#include "fixtures.hpp"
#include "ooalfsr/lfsr.hpp"

using namespace ooalfsr;

namespace {

std::vector<Lfsr> all_lfsrs(std::uint32_t q, unsigned t) {
    std::vector<Lfsr> out;
    for (auto& f : enumerate_primitive_polys(Field::of_order(q), t)) out.push_back(Lfsr::with_impulse_seed(f));
    return out;
}

// Runs found by scanning from a position where the symbol changes.
RunCensus reference_census(const Sequence& seq) {
    const auto n = static_cast<std::int64_t>(seq.size());
    std::int64_t s = 0;
    while (seq[s] == seq[s - 1]) ++s;
    RunCensus out;
    for (std::int64_t i = s; i < s + n;) {
        std::int64_t j = i;
        while (j < s + n && seq[j] == seq[i]) ++j;
        ++out[{seq[i], static_cast<std::size_t>(j - i)}];
        i = j;
    }
    return out;
}

RunCensus golomb_counts(std::uint32_t q, unsigned t) {
    RunCensus want;
    for (Elem s = 0; s < q; ++s) {
        for (std::size_t l = 1; l + 2 <= t; ++l) {
            std::size_t c = (q - 1) * (q - 1);
            for (std::size_t e = 0; e < t - l - 2; ++e) c *= q;
            want[{s, l}] = c;
        }
        if (s == 0)
            want[{s, t - 1}] = q - 1;
        else if (q > 2)
            want[{s, t - 1}] = q - 2;
        if (s != 0) want[{s, t}] = 1;
    }
    return want;
}

unsigned scan_z(const Sequence& seq, std::int64_t n, std::int64_t k) {
    unsigned z = 0;
    while (seq[n + (z + 1) * k] == 0) ++z;
    return z;
}

unsigned multiplicity(const Poly& p, Elem beta) {
    for (const auto& r : roots_with_multiplicity(p))
        if (r.value == beta) return r.multiplicity;
    return 0;
}

}  // namespace

TEST(Runs, WrapAroundRunsAreMerged) {
    const Sequence s({0, 1, 1, 0, 0}, 2);
    const auto runs = find_runs(s);
    ASSERT_EQ(runs.size(), 2u);
    EXPECT_EQ(runs[0], (ooalfsr::Run{1, 1, 2}));
    EXPECT_EQ(runs[1], (ooalfsr::Run{3, 0, 3}));
    EXPECT_TRUE(is_run(s, 3, 3, 0));
    EXPECT_FALSE(is_run(s, 3, 2, 0));
    EXPECT_FALSE(is_run(s, 4, 2, 0));
    EXPECT_THROW(find_runs(Sequence({1, 1, 1}, 2)), std::invalid_argument);
}

TEST(Runs, CensusMatchesScanAndGolombCounts) {
    for (auto [q, t] : fixtures::kSmallPairs)
        for (const auto& l : all_lfsrs(q, t)) {
            const auto seq = generate_period(l);
            const auto census = run_census(seq);
            EXPECT_EQ(census, reference_census(seq));
            EXPECT_EQ(census, golomb_counts(q, t)) << l.characteristic().to_string();
            EXPECT_TRUE(golomb_run_mismatches(census, q, t).empty());
        }
}

TEST(Runs, GolombCheckReportsDeviations) {
    auto census = golomb_counts(3, 4);
    ++census[{1, 2}];
    census[{0, 5}] = 1;
    EXPECT_EQ(golomb_run_mismatches(census, 3, 4).size(), 2u);
}

TEST(ZeroRunPolynomial, KnownTernaryValues) {
    const auto l = fixtures::ternary4();
    const auto seq = generate_period(l);
    const Field& F = l.base();
    EXPECT_EQ(zero_run_polynomial(l, seq, 18, 1), Poly(F, {1, 0, 2}));
    EXPECT_EQ(zero_run_polynomial(l, seq, 27, 1), Poly(F, {1, 1, 1}));
    EXPECT_EQ(z_count(l, seq, 18, 1, 1), 1u);
    EXPECT_EQ(z_count(l, seq, 18, 1, 2), 1u);
    EXPECT_EQ(z_count(l, seq, 27, 1, 1), 2u);
    EXPECT_EQ(z_count(l, seq, 27, 1, 2), 0u);
}

TEST(ZeroRunPolynomial, ShiftedZeroRunsOfTernaryExample) {
    const auto l = fixtures::ternary4();
    const auto seq = generate_period(l);
    EXPECT_TRUE(is_run(seq, 18, 1, 0));
    EXPECT_TRUE(is_run(seq, 18 + 27, 2, 0));
    EXPECT_TRUE(is_run(seq, 18 + 76, 2, 0));
    EXPECT_TRUE(is_run(seq, 27, 1, 0));
    EXPECT_TRUE(is_run(seq, 27 + 27, 2, 0));
    EXPECT_TRUE(is_run(seq, 27 + 54, 3, 0));
}

TEST(ZeroRunPolynomial, RejectsInvalidIntervals) {
    const auto l = fixtures::ternary4();
    const auto seq = generate_period(l);
    EXPECT_THROW(zero_run_polynomial(l, seq, 18, 2), std::invalid_argument);  // l > t-3
    EXPECT_THROW(zero_run_polynomial(l, seq, 0, 1), std::invalid_argument);   // a_0 = 1
    EXPECT_THROW(zero_run_polynomial(l, seq, 1, 0), std::invalid_argument);   // a_1 = 0 at l = 0
    EXPECT_THROW(z_count(l, seq, 18, 1, 0), std::invalid_argument);
    EXPECT_THROW(zero_run_polynomial(fixtures::ternary3(), generate_period(fixtures::ternary3()), 1, 0),
                 std::invalid_argument);  // a_1 = 0 at l = 0
}

TEST(ZeroRunPolynomial, ZCountIsRootMultiplicity) {
    for (auto [q, t] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {2, 5}, {3, 4}, {3, 5}, {5, 3}, {2, 6}})
        for (const auto& l : all_lfsrs(q, t)) {
            const auto seq = generate_period(l);
            std::size_t checked = 0;
            for (std::int64_t n = 0; n < static_cast<std::int64_t>(seq.size()); ++n)
                for (std::size_t len = 0; len + 3 <= t; ++len) {
                    if (len == 0 ? seq[n] == 0 : !is_run(seq, n, len, 0)) continue;
                    const auto P = zero_run_polynomial(l, seq, n, len);
                    for (Elem beta = 1; beta < q; ++beta) {
                        const auto k = static_cast<std::int64_t>(k_beta(l, beta));
                        const auto z = z_count(l, seq, n, len, beta);
                        ASSERT_EQ(z, scan_z(seq, n, k));
                        ASSERT_EQ(z, multiplicity(P, beta)) << "n=" << n << " l=" << len << " beta=" << beta;
                        ++checked;
                    }
                }
            EXPECT_GT(checked, 0u);
        }
}

TEST(ZeroRunPolynomial, FactorsThroughTheShiftedRun) {
    for (auto [q, t] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 5}, {3, 4}, {3, 5}, {2, 6}})
        for (const auto& l : all_lfsrs(q, t)) {
            const auto seq = generate_period(l);
            const Field& F = l.base();
            for (std::int64_t n = 0; n < static_cast<std::int64_t>(seq.size()); ++n)
                for (std::size_t len = 1; len + 4 <= t; ++len) {
                    if (!is_run(seq, n, len, 0)) continue;
                    for (Elem beta = 1; beta < q; ++beta) {
                        if (z_count(l, seq, n, len, beta) == 0) continue;
                        const auto shifted = n + static_cast<std::int64_t>(k_beta(l, beta));
                        ASSERT_TRUE(is_run(seq, shifted, len + 1, 0));
                        EXPECT_EQ(zero_run_polynomial(l, seq, n, len),
                                  Poly::linear_root(F, beta) * zero_run_polynomial(l, seq, shifted, len + 1));
                    }
                }
        }
}

TEST(RunShifts, ShrinkingEveryRunOfLengthTwoOrMore) {
    for (auto [q, t] : fixtures::kSmallPairs)
        for (const auto& l : all_lfsrs(q, t)) {
            const auto seq = generate_period(l);
            const Field& F = l.base();
            for (const auto& r : find_runs(seq)) {
                if (r.length < 2) continue;
                for (Elem beta = 1; beta < q; ++beta) {
                    const auto s = shrink_run(l, seq, r, beta);
                    EXPECT_EQ(s.length, r.length - 1);
                    EXPECT_EQ(s.symbol, F.mul(r.symbol, F.sub(1, beta)));
                    EXPECT_EQ(s.start, seq.wrap(static_cast<std::int64_t>(r.start) - static_cast<std::int64_t>(k_beta(l, beta))));
                }
            }
        }
}

TEST(RunShifts, GrowingZeroRunsGivesGeometricIntervals) {
    for (auto [q, t] : fixtures::kSmallPairs)
        for (const auto& l : all_lfsrs(q, t)) {
            const auto seq = generate_period(l);
            const Field& F = l.base();
            for (const auto& r : find_runs(seq)) {
                if (r.symbol != 0) continue;
                for (Elem beta = 1; beta < q; ++beta) {
                    const auto n = static_cast<std::int64_t>(grow_zero_run(l, seq, r, beta));
                    for (std::size_t i = 0; i <= r.length; ++i)
                        EXPECT_EQ(seq[n + static_cast<std::int64_t>(i)], F.mul(seq[n], F.pow(beta, static_cast<std::int64_t>(i))));
                }
            }
            EXPECT_THROW(grow_zero_run(l, seq, ooalfsr::Run{0, 1, 1}, 1), std::invalid_argument);
        }
}

TEST(RunShifts, ZeroRunsPairWithLongerNonzeroRuns) {
    for (auto [q, t] : fixtures::kSmallPairs)
        for (const auto& l : all_lfsrs(q, t)) {
            const auto seq = generate_period(l);
            const auto census = run_census(seq);
            for (std::size_t len = 1; len < t; ++len) {
                const auto pairs = run_bijection(l, seq, len);
                std::size_t zero_runs = 0, longer = 0;
                for (const auto& [key, count] : census) {
                    if (key.first == 0 && key.second == len) zero_runs += count;
                    if (key.first != 0 && key.second > len) longer += count;
                }
                EXPECT_EQ(pairs.size(), zero_runs);
                EXPECT_EQ(pairs.size(), longer);
                const auto k1 = static_cast<std::int64_t>(k_beta(l, 1));
                for (const auto& [z, nz] : pairs) {
                    EXPECT_GT(nz.length, len);
                    if (len + 1 == t) {
                        EXPECT_EQ(nz.length, t);
                    }
                    const auto shift = static_cast<std::int64_t>(nz.length - len) * k1;
                    EXPECT_EQ(nz.start, seq.wrap(static_cast<std::int64_t>(z.start) + shift));
                }
            }
            EXPECT_THROW(run_bijection(l, seq, 0), std::invalid_argument);
            EXPECT_THROW(run_bijection(l, seq, t), std::invalid_argument);
        }
}
