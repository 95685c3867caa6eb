/**************************************************************************
 * construct.cpp
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

#include "ooalfsr/construct.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace ooalfsr {

namespace {

void check_verified(const OoaArray& array, const char* what) {
    auto report = verify_ooa(array);
    if (!report.passed())
        throw std::logic_error(std::string(what) + " failed OOA verification: " + report.summary());
}

}  // namespace

std::vector<std::pair<Label, Label>> ColumnMap::collisions() const {
    std::vector<std::pair<Label, Label>> out;
    std::map<std::size_t, Label> first;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        Label l{static_cast<unsigned>(i / t) + 1, static_cast<unsigned>(i % t) + 1};
        auto [it, fresh] = first.emplace(columns[i], l);
        if (!fresh) out.emplace_back(it->second, l);
    }
    return out;
}

ColumnMap runs_column_map(const Lfsr& lfsr) {
    const unsigned t = lfsr.degree();
    if (t < 3) throw std::invalid_argument("RUNS construction needs t >= 3");
    const std::uint32_t q = lfsr.base().order();
    const std::uint64_t k = lfsr.window();
    ColumnMap map;
    map.t = t;
    map.q = q;
    for (unsigned j = 1; j <= t; ++j) map.columns.push_back(t - j);
    for (unsigned j = 1; j <= t; ++j) map.columns.push_back(t + j - 1);
    map.block_beta.assign(2, 0);
    for (Elem beta = 1; beta < q; ++beta) {
        const auto kb = k_beta_in_window(lfsr, beta);
        for (unsigned j = 1; j <= t; ++j) map.columns.push_back((t + j * kb) % k);
        map.block_beta.push_back(beta);
    }
    return map;
}

OoaArray build_runs_ooa(const Lfsr& lfsr, bool verify) {
    const auto map = runs_column_map(lfsr);
    const auto m = subinterval_array(lfsr);
    OoaArray out({lfsr.degree(), lfsr.base().order() + 1, lfsr.degree(), lfsr.base().order(), 1},
                 m.select_columns(map.columns));
    if (verify) check_verified(out, "RUNS array");
    return out;
}

OoaArray build_rts_ooa(const Field& base, unsigned t, bool verify) {
    if (t < 2) throw std::invalid_argument("RTS construction needs t >= 2");
    const std::uint32_t q = base.order();
    std::uint64_t rows = 1;
    for (unsigned i = 0; i < t; ++i) rows *= q;
    const std::size_t cols = std::size_t{q + 1} * t;
    SymbolArray a(rows, cols);
    std::vector<Elem> g(t, 0);
    for (std::uint64_t r = 0; r < rows; ++r) {
        auto rest = r;
        for (unsigned i = 0; i < t; ++i) {
            g[i] = static_cast<Elem>(rest % q);
            rest /= q;
        }
        const Poly poly(base, g);
        for (Elem point = 0; point < q; ++point) {
            const auto h = hasse_coefficients(poly, point, t);
            for (unsigned j = 0; j < t; ++j) a.at(r, std::size_t{point} * t + j) = h[j];
        }
        for (unsigned j = 1; j <= t; ++j) a.at(r, std::size_t{q} * t + j - 1) = g[t - j];
    }
    OoaArray out({t, q + 1, t, q, 1}, std::move(a));
    if (verify) check_verified(out, "RTS array");
    return out;
}

std::size_t XSet::distinct_count() const {
    return std::set<std::vector<Elem>>(vectors.begin(), vectors.end()).size();
}

XSet x_set(const Lfsr& lfsr) {
    const auto map = runs_column_map(lfsr);
    XSet xs;
    xs.v_exponent = lfsr.log_alpha(gamma_of_seed(lfsr));
    xs.columns = map.columns;
    const Field& ext = lfsr.ext();
    for (auto j : map.columns) {
        std::vector<Elem> vec(lfsr.degree());
        const Elem base = lfsr.alpha_pow(static_cast<std::int64_t>(xs.v_exponent + j));
        Elem x = base;
        for (auto& b : vec) {
            b = lfsr.embedding().trace(x);
            x = ext.mul(x, lfsr.alpha());
        }
        xs.vectors.push_back(std::move(vec));
    }
    return xs;
}

OoaArray array_from_x_set(const Lfsr& lfsr, const XSet& xs) {
    const std::size_t rows = lfsr.period() + 1;
    SymbolArray a(rows, xs.vectors.size());
    for (std::size_t c = 0; c < xs.vectors.size(); ++c) {
        const auto seq = generate_period(lfsr.with_seed(xs.vectors[c]));
        for (std::size_t r = 0; r + 1 < rows; ++r) a.at(r, c) = seq[static_cast<std::int64_t>(r)];
    }
    const auto t = lfsr.degree();
    const auto q = lfsr.base().order();
    return OoaArray({t, q + 1, t, q, 1}, std::move(a));
}

}  // namespace ooalfsr
