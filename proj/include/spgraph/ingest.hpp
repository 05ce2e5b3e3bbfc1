// Copyright 2026 The spgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Edge-list readers and writers.
//
// TSV: one "<u>\t<v>\t<w>\n" line per stored entry, 1-based decimal ids.
// MMIO: MatrixMarket coordinate files (pattern/integer/real, general/symmetric).
//
// Parsing keeps the raw entries (self-loops, duplicates, both orientations);
// normalize() turns them into a canonical undirected simple graph. Weights are
// read and validated but never used: every edge has weight one.

#ifndef SPGRAPH_INGEST_HPP
#define SPGRAPH_INGEST_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "spgraph/error.hpp"
#include "spgraph/graph.hpp"

namespace spgraph {

struct RawTriple {
  std::uint64_t u;
  std::uint64_t v;
  std::int64_t w;

  friend bool operator==(const RawTriple&, const RawTriple&) = default;
};

struct RawTriples {
  std::vector<RawTriple> triples;
  std::optional<std::size_t> declared_n;  // set by MMIO size lines
};

enum class Format { tsv, mmio };

inline std::string to_string(Format f) { return f == Format::tsv ? "tsv" : "mmio"; }

inline std::optional<Format> parse_format(std::string_view s) {
  if (s == "tsv") return Format::tsv;
  if (s == "mmio" || s == "mtx") return Format::mmio;
  return std::nullopt;
}

/// Format implied by a file extension (.tsv, .mtx, .mmio), if any.
inline std::optional<Format> format_from_path(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  return parse_format(path.substr(dot + 1));
}

namespace detail {

inline std::string_view trim_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

inline bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

template <class T>
T parse_number(std::string_view field, std::size_t line, const char* what) {
  T value{};
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && field.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

inline std::uint64_t parse_vertex(std::string_view field, std::size_t line) {
  const auto id = parse_number<std::int64_t>(field, line, "vertex id");
  if (id < 1) throw ParseError(line, "vertex id " + std::to_string(id) + " is below 1");
  if (static_cast<std::uint64_t>(id) > std::numeric_limits<VertexId>::max()) {
    throw ParseError(line, "vertex id " + std::to_string(id) + " exceeds the 32-bit id range");
  }
  return static_cast<std::uint64_t>(id);
}

// Whitespace-separated tokens, for MMIO lines.
inline std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace detail

/// Reads tab-separated (u, v, w) triples. Accepts \n or \r\n endings, a
/// missing final newline, and skips blank lines.
inline RawTriples parse_tsv(std::istream& in) {
  RawTriples out;
  std::string buf;
  std::size_t line_no = 0;
  while (std::getline(in, buf)) {
    ++line_no;
    const std::string_view line = detail::trim_cr(buf);
    if (line.empty()) continue;
    std::string_view fields[3];
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      const auto piece = line.substr(start, tab == std::string_view::npos ? line.npos : tab - start);
      if (count < 3) fields[count] = piece;
      ++count;
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (count != 3) {
      throw ParseError(line_no, "expected 3 tab-separated fields, found " + std::to_string(count));
    }
    const auto u = detail::parse_vertex(fields[0], line_no);
    const auto v = detail::parse_vertex(fields[1], line_no);
    const auto w = detail::parse_number<std::int64_t>(fields[2], line_no, "weight");
    out.triples.push_back({u, v, w});
  }
  if (in.bad()) throw ParseError(0, "read failure");
  return out;
}

/// Reads a MatrixMarket coordinate file. Symmetric storage is expanded to
/// both orientations; pattern entries get weight 1 and real weights are
/// rounded. n is max(nrows, ncols) from the size line.
inline RawTriples parse_mmio(std::istream& in) {
  RawTriples out;
  std::string buf;
  std::size_t line_no = 0;

  if (!std::getline(in, buf)) throw ParseError(1, "missing MatrixMarket header");
  ++line_no;
  const auto header = detail::tokens(detail::trim_cr(buf));
  if (header.size() != 5 || header[0] != "%%MatrixMarket") {
    throw ParseError(line_no, "malformed MatrixMarket header");
  }
  const std::string object = detail::lower(header[1]);
  const std::string layout = detail::lower(header[2]);
  const std::string field = detail::lower(header[3]);
  const std::string symmetry = detail::lower(header[4]);
  if (object != "matrix" || layout != "coordinate") {
    throw ParseError(line_no, "only 'matrix coordinate' files are supported");
  }
  if (field != "pattern" && field != "integer" && field != "real") {
    throw ParseError(line_no, "unsupported field '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric") {
    throw ParseError(line_no, "unsupported symmetry '" + symmetry + "'");
  }
  const bool symmetric = symmetry == "symmetric";
  const std::size_t value_fields = field == "pattern" ? 0 : 1;

  std::optional<std::size_t> nrows, ncols, nnz;
  std::size_t seen = 0;
  while (std::getline(in, buf)) {
    ++line_no;
    const std::string_view line = detail::trim_cr(buf);
    if (!line.empty() && line.front() == '%') continue;
    if (detail::is_blank(line)) continue;
    const auto tok = detail::tokens(line);
    if (!nnz) {
      if (tok.size() != 3) throw ParseError(line_no, "size line must hold 'nrows ncols nnz'");
      nrows = detail::parse_number<std::size_t>(tok[0], line_no, "row count");
      ncols = detail::parse_number<std::size_t>(tok[1], line_no, "column count");
      nnz = detail::parse_number<std::size_t>(tok[2], line_no, "entry count");
      if (std::max(*nrows, *ncols) > std::numeric_limits<VertexId>::max()) {
        throw ParseError(line_no, "dimensions exceed the 32-bit id range");
      }
      out.declared_n = std::max(*nrows, *ncols);
      out.triples.reserve(symmetric ? 2 * *nnz : *nnz);
      continue;
    }
    if (tok.size() != 2 + value_fields) {
      throw ParseError(line_no, "expected " + std::to_string(2 + value_fields) +
                                    " fields, found " + std::to_string(tok.size()));
    }
    if (seen == *nnz) throw ParseError(line_no, "more entries than the declared " +
                                                     std::to_string(*nnz));
    const auto r = detail::parse_vertex(tok[0], line_no);
    const auto c = detail::parse_vertex(tok[1], line_no);
    if (r > *nrows || c > *ncols) {
      throw ParseError(line_no, "entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                    ") outside declared " + std::to_string(*nrows) + "x" +
                                    std::to_string(*ncols));
    }
    std::int64_t w = 1;
    if (field == "integer") {
      w = detail::parse_number<std::int64_t>(tok[2], line_no, "value");
    } else if (field == "real") {
      w = static_cast<std::int64_t>(detail::parse_number<double>(tok[2], line_no, "value"));
    }
    out.triples.push_back({r, c, w});
    if (symmetric && r != c) out.triples.push_back({c, r, w});
    ++seen;
  }
  if (in.bad()) throw ParseError(0, "read failure");
  if (!nnz) throw ParseError(line_no, "missing size line");
  if (seen != *nnz) {
    throw ParseError(line_no, "declared " + std::to_string(*nnz) + " entries, found " +
                                  std::to_string(seen));
  }
  return out;
}

inline RawTriples parse(std::istream& in, Format f) {
  return f == Format::tsv ? parse_tsv(in) : parse_mmio(in);
}

/// Drops self-loops, symmetrizes, dedupes and shifts to 0-based ids.
/// n is n_override, else the declared n, else the largest id seen.
inline Graph normalize(const RawTriples& raw, std::optional<std::size_t> n_override = {}) {
  std::uint64_t max_id = 0;
  std::vector<Edge> pairs;
  pairs.reserve(raw.triples.size());
  for (const auto& t : raw.triples) {
    max_id = std::max({max_id, t.u, t.v});
    pairs.push_back({static_cast<VertexId>(t.u - 1), static_cast<VertexId>(t.v - 1)});
  }
  std::size_t n = raw.declared_n.value_or(0);
  n = std::max<std::size_t>(n, max_id);
  if (n_override) {
    if (*n_override < max_id) {
      throw ContractError("vertex count override " + std::to_string(*n_override) +
                          " is below the largest vertex id " + std::to_string(max_id));
    }
    n = *n_override;
  }
  return Graph(EdgeList::canonicalize(n, std::move(pairs)));
}

/// Both orientations of every edge, in row-major adjacency order, weight 1.
inline void write_tsv(const Graph& g, std::ostream& out) {
  const SparseMatrix& a = g.adjacency();
  std::string line;
  for (std::size_t r = 0; r < a.nrows(); ++r) {
    for (Index c : a.row_cols(r)) {
      line.clear();
      line += std::to_string(r + 1);
      line += '\t';
      line += std::to_string(c + 1);
      line += "\t1\n";
      out << line;
    }
  }
  if (!out) throw std::runtime_error("TSV write failed");
}

/// "coordinate pattern symmetric", one lower-triangle (row > col) entry per
/// edge, in column-major order.
inline void write_mmio(const Graph& g, std::ostream& out) {
  const std::size_t n = g.num_vertices();
  out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
  out << n << ' ' << n << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edge_list().edges()) out << e.v + 1 << ' ' << e.u + 1 << '\n';
  if (!out) throw std::runtime_error("MatrixMarket write failed");
}

inline void write(const Graph& g, std::ostream& out, Format f) {
  f == Format::tsv ? write_tsv(g, out) : write_mmio(g, out);
}

struct LoadedGraph {
  Graph graph;
  std::size_t stored_entries;  // raw entries read, before normalization
};

inline LoadedGraph load_graph(std::istream& in, Format f,
                              std::optional<std::size_t> n_override = {}) {
  RawTriples raw = parse(in, f);
  const std::size_t stored = raw.triples.size();
  return {normalize(raw, n_override), stored};
}

inline LoadedGraph load_graph(const std::string& path, Format f,
                              std::optional<std::size_t> n_override = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return load_graph(in, f, n_override);
}

}  // namespace spgraph

#endif  // SPGRAPH_INGEST_HPP
