/**************************************************************************
 * hyper.hpp
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
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ooalfsr/array.hpp"
#include "ooalfsr/lfsr.hpp"
#include "ooalfsr/ooa.hpp"

namespace ooalfsr {

using Vertex = std::uint32_t;

/**
 * t-uniform hypergraph on labelled vertices 0..n-1.
 *
 * Edges are stored as sorted vertex tuples in one flat array, the tuples
 * themselves in lexicographic order, so membership is a binary search.
 */
class Hypergraph {
public:
    /// Validates labels (distinct) and edges (t distinct in-range vertices);
    /// sorts and deduplicates the edge list.
    Hypergraph(unsigned t, std::vector<std::string> labels, std::vector<std::vector<Vertex>> edges);

    unsigned uniformity() const noexcept { return t_; }
    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return t_ == 0 ? 0 : flat_.size() / t_; }

    const std::string& label(Vertex v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// Throws std::out_of_range for an unknown label.
    Vertex vertex(const std::string& label) const;

    std::span<const Vertex> edge(std::size_t i) const { return {flat_.data() + i * t_, t_}; }
    /// Order-insensitive membership test.
    bool has_edge(std::span<const Vertex> vertices) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.t_ == b.t_ && a.labels_ == b.labels_ && a.flat_ == b.flat_;
    }

private:
    unsigned t_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<Vertex> flat_;
};

/// Total map V(G) -> V(H) by vertex id.
struct VertexMap {
    std::vector<Vertex> image;

    Vertex operator()(Vertex v) const { return image.at(v); }
    friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

/// Vertices (i,j) in row-major order; edges are the left-justified t-sets.
Hypergraph build_H_tms(unsigned t, unsigned m, unsigned s);
/// Vertices "1".."n"; every t-subset is an edge.
Hypergraph build_K_nt(unsigned n, unsigned t);
/// Vertices all q^d vectors of F_q^d; edges the linearly independent d-sets.
Hypergraph build_LI(unsigned d, std::uint32_t q);
/// Vertices the points of PG(d, q) as normalised vectors of F_q^{d+1}
/// (first nonzero coordinate 1); edges the (d+1)-sets spanning F_q^{d+1}.
Hypergraph build_PI(unsigned d, std::uint32_t q);

/// Label of a vector: concatenated codes, coordinate 0 first; codes are
/// separated by '.' when q > 10.
std::string vector_label(std::span<const Elem> v, std::uint32_t q);
/// Scales v so its first nonzero coordinate is 1. Throws for v = 0.
std::vector<Elem> projective_normalize(const Field& F, std::vector<Elem> v);

/// Every edge maps to an edge of H with no two vertices identified.
/// Throws std::invalid_argument on differing uniformities or a map that is
/// not total into V(H).
bool is_homomorphism(const Hypergraph& G, const Hypergraph& H, const VertexMap& f);

/// x -> g(f(x))
VertexMap compose(const VertexMap& f, const VertexMap& g);

/// Identity on V(G).
VertexMap identity_map(const Hypergraph& G);

/// H_{t,q+1,t} -> PI_{t-1,q}: label (i,j) goes to the projective point of
/// alpha^c, c the column of M that the RUNS construction assigns to (i,j).
VertexMap runs_vertex_map(const Lfsr& lfsr, const Hypergraph& H, const Hypergraph& PI);

/// PI(d,q) -> LI(d+1,q): each point to its normalised representative.
VertexMap pi_to_li_map(const Hypergraph& PI, const Hypergraph& LI);

/// K_m^t -> H_{t,m,t}: i -> (i,1).
VertexMap first_depth_map(const Hypergraph& K, const Hypergraph& H);

/// The subinterval array M with its columns reordered by PI_{t-1,q} vertex:
/// the column for point p is the column c of M with alpha^c proportional
/// to p.
SymbolArray subinterval_voa(const Lfsr& lfsr, const Hypergraph& PI);

/// Column g of the result is column f(g) of `voa`. Throws
/// std::invalid_argument unless f is a homomorphism G -> H and voa has one
/// column per vertex of H.
SymbolArray pullback_voa(const SymbolArray& voa, const Hypergraph& H, const Hypergraph& G, const VertexMap& f);

/// lambda-coverage of every edge; columns indexed by vertex id.
CoverageReport verify_voa(const SymbolArray& array, const Hypergraph& G, std::uint32_t v, std::uint64_t lambda);

}  // namespace ooalfsr
