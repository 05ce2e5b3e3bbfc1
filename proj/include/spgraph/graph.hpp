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

#ifndef SPGRAPH_GRAPH_HPP
#define SPGRAPH_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "spgraph/error.hpp"
#include "spgraph/sparse.hpp"

namespace spgraph {

using VertexId = Index;

/// Undirected edge in canonical orientation (u < v), 0-based ids.
struct Edge {
  VertexId u;
  VertexId v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Canonical undirected simple graph: strictly sorted edges with u < v < n.
/// The position of an edge in edges() is its edge index.
class EdgeList {
 public:
  EdgeList() = default;

  /// Adopts edges that are already canonical; throws ContractError otherwise.
  EdgeList(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ > std::numeric_limits<VertexId>::max()) {
      throw ContractError("vertex count " + std::to_string(n_) + " exceeds 32-bit ids");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.u >= e.v) {
        throw ContractError("edge " + std::to_string(i) + " is not in u < v orientation");
      }
      if (e.v >= n_) {
        throw ContractError("edge " + std::to_string(i) + " references vertex " +
                            std::to_string(e.v) + " >= n = " + std::to_string(n_));
      }
      if (i > 0 && !(edges_[i - 1] < e)) {
        throw ContractError("edges not strictly sorted at index " + std::to_string(i));
      }
    }
  }

  /// Orients, sorts and dedupes arbitrary pairs; self-loops are dropped.
  static EdgeList canonicalize(std::size_t n, std::vector<Edge> pairs) {
    std::erase_if(pairs, [](const Edge& e) { return e.u == e.v; });
    for (Edge& e : pairs) {
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return EdgeList(n, std::move(pairs));
  }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& operator[](std::size_t i) const { return edges_[i]; }

  friend bool operator==(const EdgeList&, const EdgeList&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Symmetric binary n x n adjacency with zero diagonal.
inline SparseMatrix build_adjacency(const EdgeList& e) {
  const std::size_t n = e.num_vertices();
  std::vector<std::size_t> ptr(n + 1, 0);
  for (const Edge& x : e.edges()) {
    ++ptr[x.u + 1];
    ++ptr[x.v + 1];
  }
  std::partial_sum(ptr.begin(), ptr.end(), ptr.begin());
  std::vector<Index> cols(2 * e.num_edges());
  std::vector<std::size_t> next(ptr.begin(), ptr.end() - 1);
  // Canonical order fills every row in increasing column order: row x first
  // receives the smaller endpoints of edges (w, x), then the larger ones of (x, v).
  for (const Edge& x : e.edges()) {
    cols[next[x.u]++] = x.v;
    cols[next[x.v]++] = x.u;
  }
  std::vector<Value> vals(cols.size(), 1);
  return SparseMatrix::from_csr(n, n, std::move(ptr), std::move(cols), std::move(vals));
}

/// Unoriented m x n incidence: row i holds ones at both endpoints of edge i.
inline SparseMatrix build_incidence(const EdgeList& e) {
  const std::size_t m = e.num_edges();
  std::vector<std::size_t> ptr(m + 1);
  for (std::size_t i = 0; i <= m; ++i) ptr[i] = 2 * i;
  std::vector<Index> cols;
  cols.reserve(2 * m);
  for (const Edge& x : e.edges()) {
    cols.push_back(x.u);
    cols.push_back(x.v);
  }
  std::vector<Value> vals(cols.size(), 1);
  return SparseMatrix::from_csr(m, e.num_vertices(), std::move(ptr), std::move(cols),
                                std::move(vals));
}

/// Throws MalformedIncidence unless every row holds exactly two ones.
inline void check_incidence(const SparseMatrix& e_mat) {
  for (std::size_t r = 0; r < e_mat.nrows(); ++r) {
    const auto vals = e_mat.row_values(r);
    if (vals.size() != 2 || vals[0] != 1 || vals[1] != 1) {
      throw MalformedIncidence("incidence row " + std::to_string(r) + " has " +
                               std::to_string(vals.size()) +
                               " nonzeros; expected exactly two unit entries");
    }
  }
}

/// A = E^T E - diag(d) with d the column sums (vertex degrees) of E.
/// Duplicate incidence rows yield off-diagonal entries above 1.
inline SparseMatrix adjacency_from_incidence(const SparseMatrix& e_mat) {
  check_incidence(e_mat);
  const DenseVector degrees = col_reduce(e_mat);
  return subtract(spgemm(transpose(e_mat), e_mat), diag_from_vector(degrees));
}

/// Canonical edge list of the edges an incidence matrix encodes.
/// Rows may come in any order; repeated edges are rejected.
inline EdgeList edge_list_from_incidence(const SparseMatrix& e_mat) {
  check_incidence(e_mat);
  std::vector<Edge> edges;
  edges.reserve(e_mat.nrows());
  for (std::size_t r = 0; r < e_mat.nrows(); ++r) {
    const auto c = e_mat.row_cols(r);
    edges.push_back({c[0], c[1]});
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw MalformedIncidence("incidence holds the same edge in two rows");
  }
  return EdgeList(e_mat.ncols(), std::move(edges));
}

/// Edge list plus lazily built adjacency and incidence matrices. Copies share
/// the cached matrices; everything is read-only once built.
class Graph {
 public:
  Graph() : Graph(EdgeList{}) {}
  explicit Graph(EdgeList edges)
      : edges_(std::make_shared<const EdgeList>(std::move(edges))),
        cache_(std::make_shared<Cache>()) {}

  const EdgeList& edge_list() const noexcept { return *edges_; }
  std::size_t num_vertices() const noexcept { return edges_->num_vertices(); }
  std::size_t num_edges() const noexcept { return edges_->num_edges(); }

  const SparseMatrix& adjacency() const {
    std::call_once(cache_->adjacency_once, [&] { cache_->adjacency = build_adjacency(*edges_); });
    return cache_->adjacency;
  }

  const SparseMatrix& incidence() const {
    std::call_once(cache_->incidence_once, [&] { cache_->incidence = build_incidence(*edges_); });
    return cache_->incidence;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.edge_list() == b.edge_list(); }

 private:
  struct Cache {
    std::once_flag adjacency_once;
    std::once_flag incidence_once;
    SparseMatrix adjacency;
    SparseMatrix incidence;
  };

  std::shared_ptr<const EdgeList> edges_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace spgraph

#endif  // SPGRAPH_GRAPH_HPP
