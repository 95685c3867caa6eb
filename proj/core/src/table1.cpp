/**************************************************************************
 * table1.cpp
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

#include "ooalfsr/table1.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

#include "ooalfsr/combinatorics.hpp"
#include "ooalfsr/construct.hpp"
#include "ooalfsr/lfsr.hpp"
#include "ooalfsr/ooa.hpp"

namespace ooalfsr {

std::uint64_t Table1Row::runs_min_covered() const {
    return runs_covered.empty() ? 0 : *std::min_element(runs_covered.begin(), runs_covered.end());
}

std::uint64_t Table1Row::runs_max_covered() const {
    return runs_covered.empty() ? 0 : *std::max_element(runs_covered.begin(), runs_covered.end());
}

double Table1Row::runs_avg() const {
    if (runs_covered.empty()) return 0.0;
    const auto sum = std::accumulate(runs_covered.begin(), runs_covered.end(), std::uint64_t{0});
    return static_cast<double>(sum) / (static_cast<double>(total) * runs_covered.size());
}

Table1Row table1_stats(std::uint32_t q, unsigned t, unsigned threads) {
    const Field base = Field::of_order(q);
    const auto polys = enumerate_primitive_polys(base, t);

    Table1Row row;
    row.t = t;
    row.q = q;
    row.count_f = polys.size();
    row.total = binomial(std::uint64_t{q + 1} * t, t);
    row.runs_covered.assign(polys.size(), 0);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(polys.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < polys.size();) {
            const auto array = build_runs_ooa(Lfsr::with_impulse_seed(polys[i]), false);
            row.runs_covered[i] = coverage_ratio(array, CensusMethod::rank).covered;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    row.rts_covered = coverage_ratio(build_rts_ooa(base, t, false), CensusMethod::rank).covered;
    worker();
    for (auto& th : pool) th.join();
    return row;
}

std::string format_table1(const Table1Row& row) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << "#f=" << row.count_f << " min=" << row.runs_min()
       << " max=" << row.runs_max() << " avg=" << row.runs_avg() << " rts=" << row.rts();
    return os.str();
}

}  // namespace ooalfsr
