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

// Benchmark harness: times a kernel on an in-memory graph, checks the result
// against an expected value and reports throughput in edges per second.
//
// Loading and normalization happen once, outside the timed region. Only the
// kernel call itself is timed, on a monotonic clock, once per repetition.

#ifndef SPGRAPH_BENCH_HPP
#define SPGRAPH_BENCH_HPP

#include <sys/resource.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "spgraph/graph.hpp"
#include "spgraph/ingest.hpp"
#include "spgraph/ktruss.hpp"
#include "spgraph/triangles.hpp"

namespace spgraph::bench {

enum class Kernel { triangles, ktruss, truss };

inline std::string_view to_string(Kernel k) {
  switch (k) {
    case Kernel::triangles: return "triangles";
    case Kernel::ktruss: return "ktruss";
    case Kernel::truss: return "truss";
  }
  return "unknown";
}

enum class Status { verified, unverified, failed };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::unverified: return "unverified";
    case Status::failed: return "failed";
  }
  return "unknown";
}

/// Per-edge trussness keyed by canonical edge.
using TrussMap = std::map<Edge, int>;

/// What a run may be checked against: a triangle count, a k-truss edge set,
/// or a full decomposition.
using Expected = std::variant<std::uint64_t, EdgeList, TrussMap>;

struct Verdict {
  Status status = Status::unverified;
  std::string detail;
};

inline Verdict verify(std::uint64_t got, std::uint64_t expected) {
  if (got == expected) return {Status::verified, "count " + std::to_string(got)};
  return {Status::failed,
          "count mismatch: got " + std::to_string(got) + ", expected " + std::to_string(expected)};
}

/// Edge-set equality, independent of order and orientation.
inline Verdict verify(const std::vector<Edge>& got, const std::vector<Edge>& expected) {
  auto canon = [](std::vector<Edge> v) {
    for (Edge& e : v) {
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const auto a = canon(got);
  const auto b = canon(expected);
  if (a == b) return {Status::verified, std::to_string(a.size()) + " edges match"};
  std::vector<Edge> extra, missing;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(extra));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(missing));
  return {Status::failed, "edge set mismatch: " + std::to_string(extra.size()) +
                              " unexpected, " + std::to_string(missing.size()) + " missing"};
}

inline Verdict verify(const TrussMap& got, const TrussMap& expected) {
  if (got == expected) return {Status::verified, std::to_string(got.size()) + " edge trussness values match"};
  std::size_t differing = 0;
  for (const auto& [edge, k] : got) {
    const auto it = expected.find(edge);
    if (it == expected.end() || it->second != k) ++differing;
  }
  for (const auto& [edge, k] : expected) {
    if (!got.contains(edge)) ++differing;
  }
  return {Status::failed, "trussness mismatch on " + std::to_string(differing) + " edges"};
}

struct MetricsRecord {
  std::string dataset;
  Kernel kernel = Kernel::triangles;
  std::string algorithm;
  std::uint64_t edges = 0;             // rate basis: stored entries, or m for generated graphs
  std::uint64_t undirected_edges = 0;  // m after normalization
  std::size_t repetitions = 0;
  std::vector<double> rep_seconds;
  double mean_seconds = 0;
  double min_seconds = 0;
  double max_seconds = 0;
  std::optional<double> rate;  // edges / mean_seconds; absent when the mean is under 1 us
  std::uint64_t peak_memory_bytes = 0;
  std::string memory_method;
  std::optional<double> energy_joules;
  std::string processor;
  std::string result;
  std::optional<std::uint64_t> triangle_count;
  Status status = Status::unverified;
  std::string verification_detail;
};

struct Config {
  std::string dataset = "unnamed";
  Kernel kernel = Kernel::triangles;
  TriangleAlgorithm algorithm = TriangleAlgorithm::hadamard_square;
  int k = 3;
  std::size_t repetitions = 100;
  std::optional<Expected> expected;
  std::optional<double> energy_joules;
  std::optional<std::string> processor;
};

/// "model name" from /proc/cpuinfo, or "unknown".
inline std::string processor_description() {
  std::ifstream in("/proc/cpuinfo");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("model name", 0) == 0) {
      const auto colon = line.find(':');
      if (colon != std::string::npos) {
        auto pos = line.find_first_not_of(' ', colon + 1);
        if (pos != std::string::npos) return line.substr(pos);
      }
    }
  }
  return "unknown";
}

struct MemoryReading {
  std::uint64_t bytes;
  std::string method;
};

/// Peak resident set size of the process when the OS reports it, otherwise
/// the bytes held by the graph's sparse matrices.
inline MemoryReading peak_memory(const Graph& g) {
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) == 0 && usage.ru_maxrss > 0) {
    return {static_cast<std::uint64_t>(usage.ru_maxrss) * 1024, "rusage-maxrss"};
  }
  auto bytes = [](const SparseMatrix& m) {
    return m.nnz() * (sizeof(Index) + sizeof(Value)) + (m.nrows() + 1) * sizeof(std::size_t);
  };
  return {bytes(g.adjacency()) + bytes(g.incidence()), "analytic-nnz"};
}

inline TrussMap truss_map(const EdgeList& edges, const std::vector<int>& max_k) {
  TrussMap out;
  for (std::size_t i = 0; i < edges.num_edges(); ++i) out.emplace(edges[i], max_k[i]);
  return out;
}

/// Runs the configured kernel config.repetitions times on g. edge_basis is
/// the edge count the rate is computed against.
inline MetricsRecord run_benchmark(const Graph& g, std::uint64_t edge_basis, const Config& config) {
  if (config.repetitions < 1) throw ContractError("repetitions must be at least 1");
  if (config.kernel == Kernel::ktruss && config.k < 2) {
    throw ContractError("k must be at least 2, got " + std::to_string(config.k));
  }

  MetricsRecord rec;
  rec.dataset = config.dataset;
  rec.kernel = config.kernel;
  rec.edges = edge_basis;
  rec.undirected_edges = g.num_edges();
  rec.repetitions = config.repetitions;
  rec.energy_joules = config.energy_joules;
  rec.processor = config.processor.value_or(processor_description());

  // Untimed setup: the matrices a kernel reads are part of the loaded graph.
  const SparseMatrix& adjacency = g.adjacency();
  const SparseMatrix& incidence = g.incidence();

  using clock = std::chrono::steady_clock;
  std::uint64_t count = 0;
  TrussResult truss;
  for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
    const auto start = clock::now();
    switch (config.kernel) {
      case Kernel::triangles:
        switch (config.algorithm) {
          case TriangleAlgorithm::hadamard_square: count = count_hadamard(adjacency).count; break;
          case TriangleAlgorithm::lu_masked: count = count_lu(adjacency).count; break;
          case TriangleAlgorithm::adjacency_incidence:
            count = count_incidence(adjacency, incidence).count;
            break;
          case TriangleAlgorithm::oracle: count = oracle_enumerate(g, false).count.count; break;
        }
        break;
      case Kernel::ktruss: truss = ktruss(incidence, config.k); break;
      case Kernel::truss: truss = truss_decomposition(incidence); break;
    }
    const auto stop = clock::now();
    rec.rep_seconds.push_back(std::chrono::duration<double>(stop - start).count());
  }

  const double total = std::accumulate(rec.rep_seconds.begin(), rec.rep_seconds.end(), 0.0);
  rec.mean_seconds = total / static_cast<double>(rec.repetitions);
  rec.min_seconds = *std::min_element(rec.rep_seconds.begin(), rec.rep_seconds.end());
  rec.max_seconds = *std::max_element(rec.rep_seconds.begin(), rec.rep_seconds.end());
  if (rec.mean_seconds >= 1e-6) rec.rate = static_cast<double>(rec.edges) / rec.mean_seconds;

  Verdict verdict;
  switch (config.kernel) {
    case Kernel::triangles:
      rec.algorithm = std::string(to_string(config.algorithm));
      rec.triangle_count = count;
      rec.result = std::to_string(count);
      if (config.expected) {
        if (const auto* want = std::get_if<std::uint64_t>(&*config.expected)) {
          verdict = verify(count, *want);
        } else {
          verdict = {Status::failed, "expected value is not a triangle count"};
        }
      }
      break;
    case Kernel::ktruss:
      rec.algorithm = "k=" + std::to_string(config.k);
      rec.result = std::to_string(truss.surviving_edges.num_edges()) + " edges";
      if (config.expected) {
        if (const auto* want = std::get_if<EdgeList>(&*config.expected)) {
          verdict = verify(truss.surviving_edges.edges(), want->edges());
        } else {
          verdict = {Status::failed, "expected value is not an edge list"};
        }
      }
      break;
    case Kernel::truss:
      rec.algorithm = "decomposition";
      rec.result = "max k=" + std::to_string(truss.k);
      if (config.expected) {
        if (const auto* want = std::get_if<TrussMap>(&*config.expected)) {
          verdict = verify(truss_map(g.edge_list(), truss.per_edge_max_k), *want);
        } else {
          verdict = {Status::failed, "expected value is not a trussness table"};
        }
      }
      break;
  }
  rec.status = verdict.status;
  rec.verification_detail = verdict.detail;

  const MemoryReading mem = peak_memory(g);
  rec.peak_memory_bytes = mem.bytes;
  rec.memory_method = mem.method;
  return rec;
}

/// Loads (untimed) from a stream, then benchmarks. The rate basis is the
/// number of stored entries read from the file.
inline MetricsRecord run_benchmark(std::istream& in, Format format, const Config& config,
                                   std::optional<std::size_t> n_override = {}) {
  const LoadedGraph loaded = load_graph(in, format, n_override);
  return run_benchmark(loaded.graph, loaded.stored_entries, config);
}

inline int exit_code(const std::vector<MetricsRecord>& records) {
  const bool failed = std::any_of(records.begin(), records.end(),
                                  [](const MetricsRecord& r) { return r.status == Status::failed; });
  return failed ? 1 : 0;
}

enum class ReportFormat { csv, json, table };

inline std::optional<ReportFormat> parse_report_format(std::string_view s) {
  if (s == "csv") return ReportFormat::csv;
  if (s == "json") return ReportFormat::json;
  if (s == "table") return ReportFormat::table;
  return std::nullopt;
}

namespace detail {

// Shortest decimal text that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::to_string(v);
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> columns = {
      "dataset", "kernel",    "algorithm",      "edges",       "mean_seconds",
      "rate",    "memory",    "energy",         "processor",   "status",
      "reps",    "min_seconds", "max_seconds",  "undirected_edges", "memory_method",
      "result"};
  return columns;
}

inline std::vector<std::string> report_row(const MetricsRecord& r) {
  return {r.dataset,
          std::string(to_string(r.kernel)),
          r.algorithm,
          std::to_string(r.edges),
          format_double(r.mean_seconds),
          r.rate ? format_double(*r.rate) : "",
          std::to_string(r.peak_memory_bytes),
          r.energy_joules ? format_double(*r.energy_joules) : "",
          r.processor,
          std::string(to_string(r.status)),
          std::to_string(r.repetitions),
          format_double(r.min_seconds),
          format_double(r.max_seconds),
          std::to_string(r.undirected_edges),
          r.memory_method,
          r.result};
}

}  // namespace detail

inline nlohmann::json to_json(const MetricsRecord& r) {
  nlohmann::json j;
  j["dataset"] = r.dataset;
  j["kernel"] = std::string(to_string(r.kernel));
  j["algorithm"] = r.algorithm;
  j["edges"] = r.edges;
  j["mean_seconds"] = r.mean_seconds;
  j["rate"] = r.rate ? nlohmann::json(*r.rate) : nlohmann::json(nullptr);
  j["memory"] = r.peak_memory_bytes;
  j["energy"] = r.energy_joules ? nlohmann::json(*r.energy_joules) : nlohmann::json(nullptr);
  j["processor"] = r.processor;
  j["status"] = std::string(to_string(r.status));
  j["reps"] = r.repetitions;
  j["min_seconds"] = r.min_seconds;
  j["max_seconds"] = r.max_seconds;
  j["undirected_edges"] = r.undirected_edges;
  j["memory_method"] = r.memory_method;
  j["result"] = r.result;
  j["rep_seconds"] = r.rep_seconds;
  if (!r.verification_detail.empty()) j["verification"] = r.verification_detail;
  return j;
}

inline void emit_report(const std::vector<MetricsRecord>& records, ReportFormat format,
                        std::ostream& out) {
  if (records.empty()) throw ContractError("emit_report: no records");
  const auto& columns = detail::report_columns();
  switch (format) {
    case ReportFormat::csv: {
      for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
      out << '\n';
      for (const auto& r : records) {
        const auto row = detail::report_row(r);
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << detail::csv_field(row[i]);
        out << '\n';
      }
      break;
    }
    case ReportFormat::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : records) {
        nlohmann::ordered_json obj;
        const auto j = to_json(r);
        for (const auto& c : columns) obj[c] = j.at(c);
        obj["rep_seconds"] = j.at("rep_seconds");
        if (j.contains("verification")) obj["verification"] = j.at("verification");
        arr.push_back(std::move(obj));
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case ReportFormat::table: {
      std::vector<std::vector<std::string>> rows;
      rows.push_back(columns);
      for (const auto& r : records) rows.push_back(detail::report_row(r));
      std::vector<std::size_t> width(columns.size(), 0);
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      }
      for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
          line += row[i];
          if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << line << '\n';
      }
      break;
    }
  }
}

}  // namespace spgraph::bench

#endif  // SPGRAPH_BENCH_HPP
