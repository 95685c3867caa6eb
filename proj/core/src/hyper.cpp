/**************************************************************************
 * hyper.cpp
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

#include "ooalfsr/hyper.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>

#include "ooalfsr/combinatorics.hpp"
#include "ooalfsr/construct.hpp"
#include "ooalfsr/linalg.hpp"
#include "parallel.hpp"

namespace ooalfsr {

Hypergraph::Hypergraph(unsigned t, std::vector<std::string> labels, std::vector<std::vector<Vertex>> edges)
    : t_(t), labels_(std::move(labels)) {
    if (t_ == 0) throw std::invalid_argument("hypergraph uniformity must be >= 1");
    for (Vertex v = 0; v < labels_.size(); ++v)
        if (!index_.emplace(labels_[v], v).second) throw std::invalid_argument("duplicate vertex label " + labels_[v]);
    for (auto& e : edges) {
        if (e.size() != t_) throw std::invalid_argument("edge size differs from uniformity");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw std::invalid_argument("edge repeats a vertex");
        if (e.back() >= labels_.size()) throw std::invalid_argument("edge vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    flat_.reserve(edges.size() * t_);
    for (const auto& e : edges) flat_.insert(flat_.end(), e.begin(), e.end());
}

Vertex Hypergraph::vertex(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw std::out_of_range("unknown vertex label " + label);
    return it->second;
}

bool Hypergraph::has_edge(std::span<const Vertex> vertices) const {
    if (vertices.size() != t_) return false;
    std::vector<Vertex> key(vertices.begin(), vertices.end());
    std::sort(key.begin(), key.end());
    std::size_t lo = 0, hi = edge_count();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const auto e = edge(mid);
        if (std::lexicographical_compare(e.begin(), e.end(), key.begin(), key.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo < edge_count() && std::equal(key.begin(), key.end(), edge(lo).begin());
}

namespace {

std::vector<std::vector<Elem>> all_vectors(std::uint32_t q, unsigned d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= q;
    std::vector<std::vector<Elem>> out;
    out.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<Elem> v(d);
        auto rest = code;
        for (auto& x : v) {
            x = static_cast<Elem>(rest % q);
            rest /= q;
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Hypergraph on `points` whose edges are the linearly independent
// `size`-subsets.
Hypergraph independent_sets(const Field& F, unsigned size, const std::vector<std::vector<Elem>>& points) {
    std::vector<std::string> labels;
    for (const auto& p : points) labels.push_back(vector_label(p, F.order()));
    std::vector<std::vector<Vertex>> edges;
    std::vector<Vector> pick(size);
    for_each_combination(points.size(), size, [&](std::span<const std::size_t> idx) {
        for (std::size_t i = 0; i < size; ++i) pick[i] = points[idx[i]];
        if (linearly_independent(F, pick)) edges.emplace_back(idx.begin(), idx.end());
        return true;
    });
    return Hypergraph(size, std::move(labels), std::move(edges));
}

void check_map(const Hypergraph& G, const Hypergraph& H, const VertexMap& f) {
    if (G.uniformity() != H.uniformity()) throw std::invalid_argument("hypergraphs differ in uniformity");
    if (f.image.size() != G.vertex_count()) throw std::invalid_argument("vertex map is not total");
    for (auto v : f.image)
        if (v >= H.vertex_count()) throw std::invalid_argument("vertex map image out of range");
}

}  // namespace

std::string vector_label(std::span<const Elem> v, std::uint32_t q) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (q > 10 && i > 0) out += '.';
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<Elem> projective_normalize(const Field& F, std::vector<Elem> v) {
    auto lead = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
    if (lead == v.end()) throw std::invalid_argument("zero vector has no projective point");
    const Elem s = F.inv(*lead);
    for (auto& x : v) x = F.mul(x, s);
    return v;
}

Hypergraph build_H_tms(unsigned t, unsigned m, unsigned s) {
    if (t < 1 || t > m * s) throw std::invalid_argument("build_H_tms: need 1 <= t <= ms");
    std::vector<std::string> labels;
    for (unsigned i = 1; i <= m; ++i)
        for (unsigned j = 1; j <= s; ++j) labels.push_back(to_string(Label{i, j}));
    std::vector<std::vector<Vertex>> edges;
    for (const auto& set : left_justified_sets(m, s, t)) {
        std::vector<Vertex> e;
        for (const auto& l : set) e.push_back((l.block - 1) * s + (l.depth - 1));
        edges.push_back(std::move(e));
    }
    return Hypergraph(t, std::move(labels), std::move(edges));
}

Hypergraph build_K_nt(unsigned n, unsigned t) {
    if (t < 1 || t > n) throw std::invalid_argument("build_K_nt: need 1 <= t <= n");
    std::vector<std::string> labels;
    for (unsigned i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::vector<Vertex>> edges;
    for_each_combination(n, t, [&](std::span<const std::size_t> idx) {
        edges.emplace_back(idx.begin(), idx.end());
        return true;
    });
    return Hypergraph(t, std::move(labels), std::move(edges));
}

Hypergraph build_LI(unsigned d, std::uint32_t q) {
    if (d < 1) throw std::invalid_argument("build_LI: d must be >= 1");
    const Field F = Field::of_order(q);
    return independent_sets(F, d, all_vectors(q, d));
}

Hypergraph build_PI(unsigned d, std::uint32_t q) {
    if (d < 1) throw std::invalid_argument("build_PI: d must be >= 1");
    const Field F = Field::of_order(q);
    std::vector<std::vector<Elem>> points;
    for (auto& v : all_vectors(q, d + 1)) {
        auto lead = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
        if (lead != v.end() && *lead == 1) points.push_back(std::move(v));
    }
    return independent_sets(F, d + 1, points);
}

bool is_homomorphism(const Hypergraph& G, const Hypergraph& H, const VertexMap& f) {
    check_map(G, H, f);
    std::atomic<bool> ok{true};
    detail::parallel_chunks(G.edge_count(), [&](std::size_t begin, std::size_t end) {
        std::vector<Vertex> img(G.uniformity());
        for (std::size_t i = begin; i < end && ok.load(std::memory_order_relaxed); ++i) {
            const auto e = G.edge(i);
            std::transform(e.begin(), e.end(), img.begin(), [&](Vertex v) { return f.image[v]; });
            std::sort(img.begin(), img.end());
            if (std::adjacent_find(img.begin(), img.end()) != img.end() || !H.has_edge(img)) ok = false;
        }
    });
    return ok;
}

VertexMap compose(const VertexMap& f, const VertexMap& g) {
    VertexMap out;
    out.image.reserve(f.image.size());
    for (auto v : f.image) out.image.push_back(g(v));
    return out;
}

VertexMap identity_map(const Hypergraph& G) {
    VertexMap out;
    for (Vertex v = 0; v < G.vertex_count(); ++v) out.image.push_back(v);
    return out;
}

VertexMap runs_vertex_map(const Lfsr& lfsr, const Hypergraph& H, const Hypergraph& PI) {
    const auto map = runs_column_map(lfsr);
    const unsigned t = lfsr.degree();
    const std::uint32_t q = lfsr.base().order();
    if (H.vertex_count() != std::size_t{q + 1} * t) throw std::invalid_argument("runs_vertex_map: source size mismatch");
    VertexMap f;
    for (Vertex v = 0; v < H.vertex_count(); ++v) {
        const Label l{v / t + 1, v % t + 1};
        if (H.label(v) != to_string(l)) throw std::invalid_argument("runs_vertex_map: source is not H_{t,q+1,t}");
        const auto point = projective_normalize(lfsr.base(), power_coordinates(lfsr, map.column(l)));
        f.image.push_back(PI.vertex(vector_label(point, q)));
    }
    return f;
}

VertexMap pi_to_li_map(const Hypergraph& PI, const Hypergraph& LI) {
    VertexMap f;
    for (const auto& label : PI.labels()) f.image.push_back(LI.vertex(label));
    return f;
}

VertexMap first_depth_map(const Hypergraph& K, const Hypergraph& H) {
    VertexMap f;
    for (const auto& label : K.labels()) f.image.push_back(H.vertex("(" + label + ",1)"));
    return f;
}

SymbolArray subinterval_voa(const Lfsr& lfsr, const Hypergraph& PI) {
    const auto m = subinterval_array(lfsr);
    const auto coords = power_coordinate_table(lfsr, lfsr.window());
    if (PI.vertex_count() != m.cols()) throw std::invalid_argument("subinterval_voa: PI size differs from k");
    std::vector<std::size_t> order(m.cols(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto point = projective_normalize(lfsr.base(), coords[c]);
        order.at(PI.vertex(vector_label(point, lfsr.base().order()))) = c;
    }
    return m.select_columns(order);
}

SymbolArray pullback_voa(const SymbolArray& voa, const Hypergraph& H, const Hypergraph& G, const VertexMap& f) {
    if (voa.cols() != H.vertex_count()) throw std::invalid_argument("pullback_voa: array needs one column per vertex of H");
    if (!is_homomorphism(G, H, f)) throw std::invalid_argument("pullback_voa: map is not a homomorphism");
    std::vector<std::size_t> cols(f.image.begin(), f.image.end());
    return voa.select_columns(cols);
}

CoverageReport verify_voa(const SymbolArray& array, const Hypergraph& G, std::uint32_t v, std::uint64_t lambda) {
    if (array.cols() != G.vertex_count()) throw std::invalid_argument("verify_voa: array needs one column per vertex");
    CoverageReport report;
    report.total = G.edge_count();
    std::mutex mu;
    detail::parallel_chunks(
        G.edge_count(),
        [&](std::size_t begin, std::size_t end) {
            std::vector<std::vector<std::size_t>> failures;
            std::vector<std::size_t> cols(G.uniformity());
            for (std::size_t i = begin; i < end; ++i) {
                const auto e = G.edge(i);
                std::copy(e.begin(), e.end(), cols.begin());
                if (!is_lambda_covered(array, v, cols, lambda)) failures.push_back(cols);
            }
            std::lock_guard lock(mu);
            for (auto& fl : failures) report.failures.push_back(std::move(fl));
        },
        256);
    std::sort(report.failures.begin(), report.failures.end());
    report.covered = report.total - report.failures.size();
    return report;
}

}  // namespace ooalfsr
