/**************************************************************************
 * acceptance.cpp
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

// Acceptance suite: one PASS/FAIL line per criterion, details indented.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "ooalfsr/combinatorics.hpp"
#include "ooalfsr/construct.hpp"
#include "ooalfsr/hyper.hpp"
#include "ooalfsr/lfsr.hpp"
#include "ooalfsr/ooa.hpp"
#include "ooalfsr/table1.hpp"

using namespace ooalfsr;

namespace {

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("mismatch: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

struct ExpectedRow {
    unsigned t;
    std::uint32_t q;
    std::size_t count_f;
    double min, max, avg, rts;
};

const std::vector<ExpectedRow> kCoverageRows{
    {3, 2, 2, 0.595238, 0.595238, 0.595238, 0.464286}, {3, 3, 4, 0.709091, 0.740909, 0.723864, 0.545455},
    {3, 5, 20, 0.810049, 0.839461, 0.824387, 0.573529}, {3, 7, 36, 0.853261, 0.889822, 0.867054, 0.583004},
    {4, 2, 2, 0.484848, 0.523232, 0.50404, 0.345455},   {4, 3, 8, 0.588462, 0.702747, 0.632143, 0.325824},
    {4, 5, 48, 0.776774, 0.801525, 0.78791, 0.449558},  {5, 2, 6, 0.38628, 0.46953, 0.444388, 0.196803},
    {5, 3, 22, 0.602941, 0.660733, 0.635038, 0.243292}, {6, 2, 6, 0.38914, 0.446509, 0.410032, 0.135693},
    {6, 3, 48, 0.453089, 0.633845, 0.59164, 0.205296},  {7, 2, 18, 0.308763, 0.423719, 0.363138, 0.0897059},
};

std::map<std::pair<unsigned, std::uint32_t>, Table1Row> g_rows;

std::vector<Lfsr> all_lfsrs(std::uint32_t q, unsigned t) {
    std::vector<Lfsr> out;
    for (auto& f : enumerate_primitive_polys(Field::of_order(q), t)) out.push_back(Lfsr::with_impulse_seed(f));
    return out;
}

bool within(double got, double want) { return std::fabs(got - want) <= 1e-6 + 1e-12; }

std::string fmt(double x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << x;
    return os.str();
}

Check coverage_ratio_rows() {
    Check c;
    for (const auto& e : kCoverageRows) {
        const auto start = std::chrono::steady_clock::now();
        const auto row = table1_stats(e.q, e.t);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        g_rows[{e.t, e.q}] = row;
        std::ostringstream label;
        label << "t=" << e.t << " q=" << e.q;
        bool row_ok = true;
        auto field = [&](const char* name, double got, double want) {
            if (!within(got, want)) {
                row_ok = false;
                c.expect(false, label.str() + " " + name + " computed " + fmt(got) + ", table " + fmt(want));
            }
        };
        c.expect(row.count_f == e.count_f, label.str() + " #f");
        row_ok = row_ok && row.count_f == e.count_f;
        field("min", row.runs_min(), e.min);
        field("max", row.runs_max(), e.max);
        field("avg", row.runs_avg(), e.avg);
        field("rts", row.rts(), e.rts);
        std::ostringstream os;
        os << label.str() << ' ' << format_table1(row) << (row_ok ? "" : "  <-- differs") << " (" << std::setprecision(2)
           << std::fixed << secs << "s)";
        c.note(os.str());
    }
    return c;
}

Check reference_sequences() {
    Check c;
    const auto b4 = fixtures::binary4(), t4 = fixtures::ternary4(), t3 = fixtures::ternary3();
    const auto s4 = generate_period(t4);
    c.expect(generate_period(b4).to_string() == fixtures::kBinary4Period, "F_2 period");
    c.expect(s4.to_string() == fixtures::kTernary4Period, "F_3 80-symbol period");
    c.expect(generate_period(t3).to_string() == fixtures::kTernary3Period, "26-symbol period");
    c.expect(k_beta(b4, 1) == 11, "k_1 = 11");
    c.expect(k_beta(t4, 1) == 27 && k_beta(t4, 2) == 76, "k_1, k_2 = 27, 76");
    c.expect(k_beta(t3, 1) == 23, "k_1 = 23");
    const Field& F = t4.base();
    c.expect(zero_run_polynomial(t4, s4, 18, 1) == Poly(F, {1, 0, 2}), "P at n=18 is 1+2x^2");
    c.expect(zero_run_polynomial(t4, s4, 27, 1) == Poly(F, {1, 1, 1}), "P at n=27 is 1+x+x^2");
    c.expect(is_run(s4, 18 + 27, 2, 0), "zero run of length 2 at 18+27");
    c.expect(is_run(s4, 18 + 76, 2, 0), "zero run of length 2 at 18+76");
    c.expect(is_run(s4, 27 + 54, 3, 0), "zero run of length 3 at 27+54");
    c.note("k_1=" + std::to_string(k_beta(b4, 1)) + "; k_1,k_2=" + std::to_string(k_beta(t4, 1)) + "," +
           std::to_string(k_beta(t4, 2)) + "; k_1=" + std::to_string(k_beta(t3, 1)));
    return c;
}

Check small_binary_ooa() {
    Check c;
    const auto a = fixtures::ooa_3322();
    const auto report = verify_ooa(a);
    c.expect(report.passed() && report.total == 7, "all 7 left-justified sets covered");
    std::size_t caught = 0, flips = 0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t col = 0; col < a.cols(); ++col) {
            auto s = a.symbols();
            s.at(r, col) ^= 1;
            ++flips;
            caught += !verify_ooa(OoaArray(a.params(), s)).passed();
        }
    c.expect(caught == flips, "every single-symbol perturbation fails");
    c.note(report.summary() + "; perturbations rejected " + std::to_string(caught) + "/" + std::to_string(flips));
    return c;
}

Check zero_run_multiplicities() {
    Check c;
    std::size_t cases = 0;
    for (std::uint32_t q : {2u, 3u})
        for (unsigned t : {4u, 5u})
            for (const auto& l : all_lfsrs(q, t)) {
                const auto seq = generate_period(l);
                for (std::int64_t n = 0; n < static_cast<std::int64_t>(seq.size()); ++n)
                    for (std::size_t len = 0; len + 3 <= t; ++len) {
                        if (len == 0 ? seq[n] == 0 : !is_run(seq, n, len, 0)) continue;
                        const auto roots = roots_with_multiplicity(zero_run_polynomial(l, seq, n, len));
                        for (Elem beta = 1; beta < q; ++beta) {
                            const auto k = static_cast<std::int64_t>(k_beta(l, beta));
                            unsigned z = 0;
                            while (seq[n + (z + 1) * k] == 0) ++z;
                            unsigned mult = 0;
                            for (const auto& r : roots)
                                if (r.value == beta) mult = r.multiplicity;
                            ++cases;
                            if (z != mult || z_count(l, seq, n, len, beta) != z)
                                c.expect(false, l.characteristic().to_string() + " n=" + std::to_string(n) +
                                                    " l=" + std::to_string(len));
                        }
                    }
            }
    c.note(std::to_string(cases) + " (run, beta) cases");
    return c;
}

Check run_counts_and_zero_positions() {
    Check c;
    std::size_t polys = 0;
    for (std::uint32_t q = 2; q <= 243; ++q) {
        try {
            as_prime_power(q);
        } catch (const std::invalid_argument&) {
            continue;
        }
        std::uint64_t qt = q * q;
        for (unsigned t = 2; qt <= 243; ++t, qt *= q)
            for (const auto& l : all_lfsrs(q, t)) {
                ++polys;
                const auto seq = generate_period(l);
                RunCensus want;
                for (Elem s = 0; s < q; ++s) {
                    for (std::size_t len = 1; len + 2 <= t; ++len) {
                        std::size_t n = std::size_t{q - 1} * (q - 1);
                        for (std::size_t e = 0; e < t - len - 2; ++e) n *= q;
                        want[{s, len}] = n;
                    }
                    if (s == 0)
                        want[{s, t - 1}] = q - 1;
                    else if (q > 2)
                        want[{s, t - 1}] = q - 2;
                    if (s != 0) want[{s, t}] = 1;
                }
                c.expect(run_census(seq) == want, "run counts for " + l.characteristic().to_string());
                const auto k = static_cast<std::int64_t>(l.window());
                const auto zeros = (qt / q - 1) / (q - 1);
                for (std::int64_t n = 0; n < k; ++n) {
                    const auto zp = zero_positions(seq, n, l.window());
                    bool ok = zp.size() == zeros;
                    for (std::int64_t m = n + k; m < static_cast<std::int64_t>(seq.size()); m += k)
                        ok = ok && zero_positions(seq, m, l.window()) == zp;
                    if (!ok) c.expect(false, "zero positions for " + l.characteristic().to_string());
                }
            }
    }
    c.note(std::to_string(polys) + " primitive polynomials with q^t <= 243");
    return c;
}

Check rank_oracle() {
    Check c;
    std::size_t subsets = 0, disagreements = 0;
    for (auto [q, t] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {2, 4}, {3, 3}})
        for (const auto& l : all_lfsrs(q, t)) {
            const auto m = subinterval_array(l);
            const auto powers = power_coordinate_table(l, l.window());
            const Field& F = l.base();
            for_each_combination(m.cols(), t, [&](std::span<const std::size_t> cols) {
                std::vector<Vector> vs;
                for (auto col : cols) vs.push_back(powers[col]);
                ++subsets;
                disagreements += covered_iff_rank(F, vs) != is_lambda_covered(m, q, cols, 1);
                return true;
            });
        }
    c.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
    c.note(std::to_string(subsets) + " column subsets, " + std::to_string(disagreements) + " disagreements");
    return c;
}

Check construction_validity() {
    Check c;
    std::size_t arrays = 0;
    for (const auto& e : kCoverageRows) {
        for (const auto& l : all_lfsrs(e.q, e.t)) {
            ++arrays;
            const auto report = verify_ooa(build_runs_ooa(l, false));
            if (!report.passed()) c.expect(false, "RUNS " + l.characteristic().to_string() + ": " + report.summary());
        }
        const auto rts = verify_ooa(build_rts_ooa(Field::of_order(e.q), e.t, false));
        c.expect(rts.passed(), "RTS t=" + std::to_string(e.t) + " q=" + std::to_string(e.q));
        auto it = g_rows.find({e.t, e.q});
        const auto row = it != g_rows.end() ? it->second : table1_stats(e.q, e.t);
        c.expect(row.runs_min_covered() > row.rts_covered,
                 "RUNS covers more than RTS at t=" + std::to_string(e.t) + " q=" + std::to_string(e.q));
    }
    c.note(std::to_string(arrays) + " RUNS arrays and 12 RTS arrays verified");
    return c;
}

Check hypergraph_suite() {
    Check c;
    for (auto [q, t] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {3, 3}}) {
        const auto H = build_H_tms(t, q + 1, t);
        const auto PI = build_PI(t - 1, q);
        for (const auto& l : all_lfsrs(q, t)) {
            const auto f = runs_vertex_map(l, H, PI);
            const auto name = l.characteristic().to_string();
            c.expect(is_homomorphism(H, PI, f), "H -> PI for " + name);
            c.expect(pullback_voa(subinterval_voa(l, PI), PI, H, f) == build_runs_ooa(l).symbols(),
                     "pullback equals RUNS array for " + name);
        }
    }
    for (unsigned d : {2u, 3u})
        for (std::uint32_t q : {2u, 3u}) {
            const auto PI = build_PI(d, q);
            const auto LI = build_LI(d + 1, q);
            c.expect(is_homomorphism(PI, LI, pi_to_li_map(PI, LI)),
                     "PI(" + std::to_string(d) + "," + std::to_string(q) + ") -> LI");
        }
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
        {"coverage-ratio table", coverage_ratio_rows},
        {"reference sequences, shift constants and zero-run polynomials", reference_sequences},
        {"binary OOA(3,3,2,2) and its perturbations", small_binary_ooa},
        {"zero-run polynomial root multiplicities", zero_run_multiplicities},
        {"run counts and zero positions", run_counts_and_zero_positions},
        {"rank census equals brute force", rank_oracle},
        {"construction validity and dominance", construction_validity},
        {"hypergraph pullback and homomorphisms", hypergraph_suite},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.ok = false;
            c.note(std::string("exception: ") + e.what());
        }
        failed += !c.ok;
        std::cout << "criterion " << i + 1 << ": " << (c.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << '\n';
        for (const auto& n : c.notes) std::cout << "    " << n << '\n';
        std::cout.flush();
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion/criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
