/**************************************************************************
 * construct_test.cpp
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

#include <algorithm>

#include "fixtures.hpp"
#include "ooalfsr/combinatorics.hpp"
#include "ooalfsr/construct.hpp"
#include "ooalfsr/linalg.hpp"

using namespace ooalfsr;

namespace {

std::vector<std::vector<Elem>> sorted_rows(const SymbolArray& a) {
    std::vector<std::vector<Elem>> rows;
    for (std::size_t r = 0; r < a.rows(); ++r) rows.emplace_back(a.row(r).begin(), a.row(r).end());
    std::sort(rows.begin(), rows.end());
    return rows;
}

std::vector<std::size_t> block(const ColumnMap& m, unsigned i) {
    std::vector<std::size_t> out;
    for (unsigned j = 1; j <= m.t; ++j) out.push_back(m.column({i, j}));
    return out;
}

}  // namespace

TEST(ColumnMap, FirstTwoBlocksForBinaryCubics) {
    for (const auto& f : enumerate_primitive_polys(Field::of_order(2), 3)) {
        const auto m = runs_column_map(Lfsr::with_impulse_seed(f));
        EXPECT_EQ(block(m, 1), (std::vector<std::size_t>{2, 1, 0}));
        EXPECT_EQ(block(m, 2), (std::vector<std::size_t>{3, 4, 5}));
        EXPECT_EQ(m.columns.size(), 9u);
    }
}

TEST(ColumnMap, ReducedShiftsAndReportedCollisions) {
    const auto m = runs_column_map(fixtures::binary4());
    EXPECT_EQ(block(m, 3), (std::vector<std::size_t>{0, 11, 7, 3}));
    EXPECT_EQ(m.block_beta, (std::vector<Elem>{0, 0, 1}));
    const std::vector<std::pair<Label, Label>> want{{{1, 4}, {3, 1}}, {{2, 4}, {3, 3}}, {{1, 1}, {3, 4}}};
    auto got = m.collisions();
    auto sorted_want = want;
    std::sort(got.begin(), got.end());
    std::sort(sorted_want.begin(), sorted_want.end());
    EXPECT_EQ(got, sorted_want);
}

TEST(ColumnMap, CollidingLabelsNeverShareALeftJustifiedSet) {
    for (auto [q, t] : fixtures::kSmallPairs)
        for (const auto& f : enumerate_primitive_polys(Field::of_order(q), t)) {
            const auto m = runs_column_map(Lfsr::with_impulse_seed(f));
            for (const auto& [a, b] : m.collisions()) {
                ASSERT_NE(a.block, b.block);
                EXPECT_GT(a.depth + b.depth, t);
            }
        }
}

TEST(ColumnMap, RequiresDegreeThree) {
    const auto f = first_primitive_poly(Field::of_order(3), 2);
    EXPECT_THROW(runs_column_map(Lfsr::with_impulse_seed(f)), std::invalid_argument);
}

TEST(RunsOoa, VerifiesForEveryPolynomial) {
    for (auto [q, t] : fixtures::kSmallPairs)
        for (const auto& f : enumerate_primitive_polys(Field::of_order(q), t)) {
            const auto a = build_runs_ooa(Lfsr::with_impulse_seed(f), false);
            EXPECT_EQ(a.params(), (OoaParams{t, q + 1, t, q, 1}));
            EXPECT_TRUE(verify_ooa(a).passed()) << f.to_string();
            const auto gen = GeneratorMatrix::of(a.symbols(), Field::of_order(q));
            ASSERT_TRUE(gen.has_value());
            EXPECT_EQ(gen->dimension(), t);
        }
}

TEST(RunsOoa, BinaryCubicShape) {
    const auto a = build_runs_ooa(Lfsr::with_impulse_seed(first_primitive_poly(Field::of_order(2), 3)));
    EXPECT_EQ(a.rows(), 8u);
    EXPECT_EQ(a.cols(), 9u);
}

TEST(RunsOoa, RowMultisetIsSeedInvariant) {
    const auto l = fixtures::ternary4();
    const auto base = sorted_rows(build_runs_ooa(l).symbols());
    for (const std::vector<Elem>& seed : {std::vector<Elem>{0, 0, 0, 1}, {2, 1, 0, 2}, {1, 1, 1, 1}})
        EXPECT_EQ(sorted_rows(build_runs_ooa(l.with_seed(seed)).symbols()), base);
}

TEST(RtsOoa, VerifiesAndIsLinear) {
    for (auto [q, t] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 3}, {4, 3}, {5, 3}, {3, 4}}) {
        const Field F = Field::of_order(q);
        const auto a = build_rts_ooa(F, t, false);
        EXPECT_TRUE(verify_ooa(a).passed()) << q << "," << t;
        const auto gen = GeneratorMatrix::of(a.symbols(), F);
        ASSERT_TRUE(gen.has_value());
        EXPECT_EQ(gen->dimension(), t);
        for (auto x : a.symbols().row(0)) EXPECT_EQ(x, 0u);
    }
}

TEST(RtsOoa, PointZeroAndInfinityBlocks) {
    const Field F = Field::of_order(3);
    const unsigned t = 3;
    const auto a = build_rts_ooa(F, t);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const std::vector<Elem> g{static_cast<Elem>(r % 3), static_cast<Elem>((r / 3) % 3), static_cast<Elem>(r / 9)};
        for (unsigned j = 1; j <= t; ++j) {
            EXPECT_EQ(a.symbols().at(r, a.column_of({1, j})), g[j - 1]);      // Taylor coefficients at 0
            EXPECT_EQ(a.symbols().at(r, a.column_of({4, j})), g[t - j]);      // leading coefficients first
        }
    }
}

TEST(RtsOoa, CoverageRatiosOfSmallCases) {
    const auto r23 = coverage_ratio(build_rts_ooa(Field::of_order(2), 3), CensusMethod::brute_force);
    EXPECT_EQ(r23.covered, 39u);
    EXPECT_EQ(r23.total, 84u);
    const auto r33 = coverage_ratio(build_rts_ooa(Field::of_order(3), 3), CensusMethod::brute_force);
    EXPECT_NEAR(r33.ratio(), 0.545455, 1e-6);
}

TEST(RunsOoa, CoverageOfBinaryCubics) {
    for (const auto& f : enumerate_primitive_polys(Field::of_order(2), 3)) {
        const auto r = coverage_ratio(build_runs_ooa(Lfsr::with_impulse_seed(f)), CensusMethod::brute_force);
        EXPECT_EQ(r.covered, 50u);
        EXPECT_EQ(r.total, 84u);
    }
}

TEST(XSet, VectorsAreTraceSeeds) {
    const auto l = fixtures::ternary4().with_seed({2, 0, 1, 1});
    const auto xs = x_set(l);
    ASSERT_EQ(xs.vectors.size(), 4u * 4);
    EXPECT_EQ(l.alpha_pow(static_cast<std::int64_t>(xs.v_exponent)), gamma_of_seed(l));
    EXPECT_GE(xs.vectors.size(), std::size_t{3 + 4});
    EXPECT_LE(xs.distinct_count(), xs.vectors.size());
    const auto seq = generate_period(l);
    for (std::size_t c = 0; c < xs.columns.size(); ++c) {
        EXPECT_TRUE(std::any_of(xs.vectors[c].begin(), xs.vectors[c].end(), [](Elem x) { return x != 0; }));
        const auto window = seq.subinterval(static_cast<std::int64_t>(xs.columns[c]), 4);
        EXPECT_EQ(xs.vectors[c], window);
    }
}

TEST(XSet, IndependenceMatchesPowersOfAlpha) {
    for (auto [q, t] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {3, 3}, {2, 4}})
        for (const auto& f : enumerate_primitive_polys(Field::of_order(q), t)) {
            const auto l = Lfsr::with_impulse_seed(f);
            const auto xs = x_set(l);
            const Field& F = l.base();
            for_each_combination(xs.vectors.size(), t, [&](std::span<const std::size_t> pick) {
                std::vector<Vector> seeds, powers;
                for (auto i : pick) {
                    seeds.push_back(xs.vectors[i]);
                    powers.push_back(power_coordinates(l, xs.columns[i]));
                }
                EXPECT_EQ(linearly_independent(F, seeds), linearly_independent(F, powers));
                return true;
            });
        }
}

TEST(XSet, ArrayFromSeedsIsTheRunsArray) {
    for (auto [q, t] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {3, 3}, {3, 4}, {5, 3}})
        for (const auto& f : enumerate_primitive_polys(Field::of_order(q), t)) {
            auto l = Lfsr::with_impulse_seed(f);
            EXPECT_EQ(array_from_x_set(l, x_set(l)), build_runs_ooa(l));
            std::vector<Elem> seed(t, 1);
            l = l.with_seed(seed);
            EXPECT_EQ(array_from_x_set(l, x_set(l)), build_runs_ooa(l));
        }
}
