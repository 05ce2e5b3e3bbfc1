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

// Triangle counting in sparse linear algebra.
//
//   adjacency-incidence:  C = A E^T, one cell per (apex, opposite edge)
//                         pair, count = nnz(C) / 3
//   hadamard-square:      C = A^2 o A, count = sum(C) / 6
//   lu-masked:            (L, U) = A, C = A o (L U), count = sum(C) / 2
//
// All three count undirected triangles. The divisibility checks fail only
// for adjacency matrices that are asymmetric, weighted, or carry loops.

#ifndef SPGRAPH_TRIANGLES_HPP
#define SPGRAPH_TRIANGLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spgraph/error.hpp"
#include "spgraph/graph.hpp"
#include "spgraph/sparse.hpp"

namespace spgraph {

enum class TriangleAlgorithm { adjacency_incidence, hadamard_square, lu_masked, oracle };

inline std::string_view to_string(TriangleAlgorithm a) {
  switch (a) {
    case TriangleAlgorithm::adjacency_incidence: return "incidence";
    case TriangleAlgorithm::hadamard_square: return "hadamard";
    case TriangleAlgorithm::lu_masked: return "lu";
    case TriangleAlgorithm::oracle: return "oracle";
  }
  return "unknown";
}

inline std::optional<TriangleAlgorithm> parse_triangle_algorithm(std::string_view s) {
  if (s == "incidence") return TriangleAlgorithm::adjacency_incidence;
  if (s == "hadamard") return TriangleAlgorithm::hadamard_square;
  if (s == "lu") return TriangleAlgorithm::lu_masked;
  if (s == "oracle") return TriangleAlgorithm::oracle;
  return std::nullopt;
}

struct TriangleCount {
  std::uint64_t count = 0;
  TriangleAlgorithm algorithm = TriangleAlgorithm::oracle;
};

/// Triangle {apex, x, y} seen from apex, opposite edge (x, y), x < y.
struct TriangleRecord {
  VertexId apex;
  VertexId x;
  VertexId y;

  friend auto operator<=>(const TriangleRecord&, const TriangleRecord&) = default;
};

namespace detail {

inline void require_square(const SparseMatrix& a, const char* op) {
  if (a.nrows() != a.ncols()) {
    throw ContractError(std::string(op) + ": adjacency " + a.shape() + " is not square");
  }
}

inline std::uint64_t divide_exact(Value total, Value divisor, const char* op) {
  if (total < 0 || total % divisor != 0) {
    throw InvalidAdjacency(std::string(op) + ": reduction " + std::to_string(total) +
                           " is not a non-negative multiple of " + std::to_string(divisor));
  }
  return static_cast<std::uint64_t>(total / divisor);
}

}  // namespace detail

/// sum(A^2 o A) / 6. The masked product never forms A^2 in full.
inline TriangleCount count_hadamard(const SparseMatrix& a) {
  detail::require_square(a, "count_hadamard");
  const Value total = sum_all(masked_spgemm(a, a, a));
  return {detail::divide_exact(total, 6, "count_hadamard"), TriangleAlgorithm::hadamard_square};
}

/// sum(A o (L U)) / 2 with strict triangular parts.
inline TriangleCount count_lu(const SparseMatrix& a) {
  detail::require_square(a, "count_lu");
  const auto [lower, upper] = triangular_split(a);
  const Value total = sum_all(masked_spgemm(lower, upper, a));
  return {detail::divide_exact(total, 2, "count_lu"), TriangleAlgorithm::lu_masked};
}

/// Cells of C = A E^T, one per (apex, edge) pair with the apex adjacent to
/// both endpoints. Each triangle yields three cells. When cells is non-null
/// every cell is appended to it.
inline TriangleCount count_incidence(const SparseMatrix& a, const SparseMatrix& e,
                                     std::vector<TriangleRecord>* cells = nullptr) {
  detail::require_square(a, "count_incidence");
  if (e.ncols() != a.ncols()) {
    throw ContractError("count_incidence: incidence " + e.shape() +
                        " does not match adjacency " + a.shape());
  }
  check_incidence(e);
  Value total = 0;
  for (std::size_t j = 0; j < e.nrows(); ++j) {
    const auto ends = e.row_cols(j);
    const auto nx = a.row_cols(ends[0]);
    const auto ny = a.row_cols(ends[1]);
    std::size_t p = 0, q = 0;
    while (p < nx.size() && q < ny.size()) {
      if (nx[p] < ny[q]) {
        ++p;
      } else if (ny[q] < nx[p]) {
        ++q;
      } else {
        ++total;
        if (cells) cells->push_back({nx[p], ends[0], ends[1]});
        ++p;
        ++q;
      }
    }
  }
  return {detail::divide_exact(total, 3, "count_incidence"),
          TriangleAlgorithm::adjacency_incidence};
}

struct OracleTriangles {
  TriangleCount count;
  std::vector<TriangleRecord> triangles;  // apex < x < y, lexicographic
};

/// Exhaustive check of every vertex triple i < j < k against a dense
/// adjacency table. Cubic in n; meant for graphs of a few thousand vertices.
inline OracleTriangles oracle_enumerate(const Graph& g, bool keep_records = true) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> adj(n * n, 0);
  for (const Edge& e : g.edge_list().edges()) {
    adj[std::size_t{e.u} * n + e.v] = 1;
    adj[std::size_t{e.v} * n + e.u] = 1;
  }
  OracleTriangles out;
  out.count.algorithm = TriangleAlgorithm::oracle;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!adj[i * n + j]) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (adj[i * n + k] && adj[j * n + k]) {
          ++out.count.count;
          if (keep_records) {
            out.triangles.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j),
                                     static_cast<VertexId>(k)});
          }
        }
      }
    }
  }
  return out;
}

/// Dispatches to one algorithm on a graph's cached matrices.
inline TriangleCount count_triangles(const Graph& g, TriangleAlgorithm algorithm) {
  switch (algorithm) {
    case TriangleAlgorithm::adjacency_incidence:
      return count_incidence(g.adjacency(), g.incidence());
    case TriangleAlgorithm::hadamard_square:
      return count_hadamard(g.adjacency());
    case TriangleAlgorithm::lu_masked:
      return count_lu(g.adjacency());
    case TriangleAlgorithm::oracle:
      return oracle_enumerate(g, false).count;
  }
  throw ContractError("unknown triangle algorithm");
}

}  // namespace spgraph

#endif  // SPGRAPH_TRIANGLES_HPP
