/**************************************************************************
 * io.hpp
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

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ooalfsr/hyper.hpp"
#include "ooalfsr/ooa.hpp"

namespace ooalfsr {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// OOA text format:
//   ooa t=<t> m=<m> s=<s> v=<v> lambda=<l> rows=<N>
//   (1,1) (1,2) ...
//   <N rows of m*s space-separated codes>
void write_ooa(std::ostream& os, const OoaArray& array);
OoaArray read_ooa(std::istream& is);

// Hypergraph text format:
//   hypergraph t=<t> n=<n>
//   vertices:
//   <one label per line>
//   edges:
//   <one edge per line, space-separated labels>
void write_hypergraph(std::ostream& os, const Hypergraph& g);
Hypergraph read_hypergraph(std::istream& is);

/// One `src -> dst` line per vertex of G, by label.
void write_vertex_map(std::ostream& os, const VertexMap& f, const Hypergraph& G, const Hypergraph& H);
/// Every vertex of G must appear exactly once.
VertexMap read_vertex_map(std::istream& is, const Hypergraph& G, const Hypergraph& H);

/// Summary line, then `uncovered: <labels>` per failure when requested.
void write_report(std::ostream& os, const CoverageReport& report, const OoaArray& array, bool failures = true);
void write_report(std::ostream& os, const CoverageReport& report, const Hypergraph& g, bool failures = true);

}  // namespace ooalfsr
