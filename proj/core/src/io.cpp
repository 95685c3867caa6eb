/**************************************************************************
 * io.cpp
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

#include "ooalfsr/io.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace ooalfsr {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& is) : is_(is) {}

    // Next line with trailing CR and surrounding blanks removed; skips
    // blank lines.
    std::optional<std::string> next() {
        std::string line;
        while (std::getline(is_, line)) {
            ++number_;
            auto b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            auto e = line.find_last_not_of(" \t\r");
            return line.substr(b, e - b + 1);
        }
        return std::nullopt;
    }
    std::string expect(const char* what) {
        auto line = next();
        if (!line) throw ParseError(number_ + 1, std::string("unexpected end of input, expected ") + what);
        return *line;
    }
    std::size_t number() const noexcept { return number_; }

private:
    std::istream& is_;
    std::size_t number_ = 0;
};

std::vector<std::string> split(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) out.push_back(tok);
    return out;
}

std::uint64_t to_uint(const std::string& s, std::size_t line) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) throw ParseError(line, "bad integer '" + s + "'");
    return v;
}

// Parses "<keyword> k1=v1 k2=v2 ..." and returns the values keyed by name.
std::map<std::string, std::uint64_t> header(const std::string& line, const std::string& keyword, std::size_t number) {
    auto toks = split(line);
    if (toks.empty() || toks[0] != keyword) throw ParseError(number, "expected '" + keyword + "' header");
    std::map<std::string, std::uint64_t> out;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos) throw ParseError(number, "bad header field '" + toks[i] + "'");
        out[toks[i].substr(0, eq)] = to_uint(toks[i].substr(eq + 1), number);
    }
    return out;
}

std::uint64_t field(const std::map<std::string, std::uint64_t>& h, const std::string& key, std::size_t number) {
    auto it = h.find(key);
    if (it == h.end()) throw ParseError(number, "missing header field '" + key + "'");
    return it->second;
}

void write_failures(std::ostream& os, const CoverageReport& report, auto&& label) {
    for (const auto& f : report.failures) {
        os << "uncovered:";
        for (auto c : f) os << ' ' << label(c);
        os << '\n';
    }
}

}  // namespace

void write_ooa(std::ostream& os, const OoaArray& array) {
    const auto& p = array.params();
    os << "ooa t=" << p.t << " m=" << p.m << " s=" << p.s << " v=" << p.v << " lambda=" << p.lambda
       << " rows=" << array.rows() << '\n';
    const auto labels = array.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? " " : "") << to_string(labels[i]);
    os << '\n';
    for (std::size_t r = 0; r < array.rows(); ++r) {
        const auto row = array.symbols().row(r);
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
        os << '\n';
    }
}

OoaArray read_ooa(std::istream& is) {
    LineReader in(is);
    const auto h = header(in.expect("ooa header"), "ooa", in.number());
    const auto n = in.number();
    OoaParams p{static_cast<unsigned>(field(h, "t", n)), static_cast<unsigned>(field(h, "m", n)),
                static_cast<unsigned>(field(h, "s", n)), static_cast<std::uint32_t>(field(h, "v", n)),
                field(h, "lambda", n)};
    const auto rows = field(h, "rows", n);
    const std::size_t cols = std::size_t{p.m} * p.s;

    const auto labels = split(in.expect("column labels"));
    if (labels.size() != cols) throw ParseError(in.number(), "expected " + std::to_string(cols) + " column labels");
    for (std::size_t c = 0; c < cols; ++c) {
        const Label want{static_cast<unsigned>(c / p.s) + 1, static_cast<unsigned>(c % p.s) + 1};
        if (labels[c] != to_string(want))
            throw ParseError(in.number(), "column " + std::to_string(c) + " must be labelled " + to_string(want));
    }

    SymbolArray a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto toks = split(in.expect("array row"));
        if (toks.size() != cols) throw ParseError(in.number(), "row has " + std::to_string(toks.size()) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto x = to_uint(toks[c], in.number());
            if (x >= p.v) throw ParseError(in.number(), "symbol " + toks[c] + " out of range");
            a.at(r, c) = static_cast<Elem>(x);
        }
    }
    if (in.next()) throw ParseError(in.number(), "trailing data after last row");
    try {
        return OoaArray(p, std::move(a));
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, e.what());
    }
}

void write_hypergraph(std::ostream& os, const Hypergraph& g) {
    os << "hypergraph t=" << g.uniformity() << " n=" << g.vertex_count() << "\nvertices:\n";
    for (const auto& l : g.labels()) os << l << '\n';
    os << "edges:\n";
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto e = g.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j) os << (j ? " " : "") << g.label(e[j]);
        os << '\n';
    }
}

Hypergraph read_hypergraph(std::istream& is) {
    LineReader in(is);
    const auto h = header(in.expect("hypergraph header"), "hypergraph", in.number());
    const auto t = static_cast<unsigned>(field(h, "t", in.number()));
    const auto n = field(h, "n", in.number());
    if (in.expect("vertices:") != "vertices:") throw ParseError(in.number(), "expected 'vertices:'");
    std::vector<std::string> labels;
    std::map<std::string, Vertex> index;
    for (std::uint64_t i = 0; i < n; ++i) {
        auto l = in.expect("vertex label");
        if (l.find_first_of(" \t") != std::string::npos) throw ParseError(in.number(), "vertex label contains a blank");
        if (!index.emplace(l, static_cast<Vertex>(i)).second) throw ParseError(in.number(), "duplicate vertex " + l);
        labels.push_back(std::move(l));
    }
    if (in.expect("edges:") != "edges:") throw ParseError(in.number(), "expected 'edges:'");
    std::vector<std::vector<Vertex>> edges;
    while (auto line = in.next()) {
        std::vector<Vertex> e;
        for (const auto& tok : split(*line)) {
            auto it = index.find(tok);
            if (it == index.end()) throw ParseError(in.number(), "unknown vertex " + tok);
            e.push_back(it->second);
        }
        if (e.size() != t) throw ParseError(in.number(), "edge size differs from t");
        edges.push_back(std::move(e));
    }
    try {
        return Hypergraph(t, std::move(labels), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(in.number(), e.what());
    }
}

void write_vertex_map(std::ostream& os, const VertexMap& f, const Hypergraph& G, const Hypergraph& H) {
    for (Vertex v = 0; v < G.vertex_count(); ++v) os << G.label(v) << " -> " << H.label(f(v)) << '\n';
}

VertexMap read_vertex_map(std::istream& is, const Hypergraph& G, const Hypergraph& H) {
    LineReader in(is);
    constexpr Vertex unset = ~Vertex{0};
    VertexMap f{std::vector<Vertex>(G.vertex_count(), unset)};
    while (auto line = in.next()) {
        const auto toks = split(*line);
        if (toks.size() != 3 || toks[1] != "->") throw ParseError(in.number(), "expected 'src -> dst'");
        try {
            const auto src = G.vertex(toks[0]);
            if (f.image[src] != unset) throw ParseError(in.number(), "vertex " + toks[0] + " mapped twice");
            f.image[src] = H.vertex(toks[2]);
        } catch (const std::out_of_range& e) {
            throw ParseError(in.number(), e.what());
        }
    }
    for (Vertex v = 0; v < G.vertex_count(); ++v)
        if (f.image[v] == unset) throw ParseError(in.number(), "vertex " + G.label(v) + " is not mapped");
    return f;
}

void write_report(std::ostream& os, const CoverageReport& report, const OoaArray& array, bool failures) {
    os << report.summary() << '\n';
    if (failures) write_failures(os, report, [&](std::size_t c) { return to_string(array.label_of(c)); });
}

void write_report(std::ostream& os, const CoverageReport& report, const Hypergraph& g, bool failures) {
    os << report.summary() << '\n';
    if (failures) write_failures(os, report, [&](std::size_t c) { return g.label(static_cast<Vertex>(c)); });
}

}  // namespace ooalfsr
