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

// k-truss peeling on the unoriented incidence matrix E.
//
// Row e of R = E A is the sum of the adjacency rows of e's endpoints, so
// R(e, v) == 2 exactly when v closes a triangle on e and the support of e is
// the number of 2s in its row. Because A = E^T E - diag(d), removing the rows
// E_x changes A by E_x^T E_x - diag(d_x), and R can be patched in place:
//
//   R <- R(x_c, :) - E(x_c, :) [E_x^T E_x - diag(d_x)]
//
// Every round removes all edges below the support threshold at once and
// repeats until none remain.

#ifndef SPGRAPH_KTRUSS_HPP
#define SPGRAPH_KTRUSS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "spgraph/error.hpp"
#include "spgraph/graph.hpp"
#include "spgraph/sparse.hpp"

namespace spgraph {

/// Working state of one peeling run, as seen at a round boundary.
struct TrussState {
  SparseMatrix incidence;                 // live edges x n
  SparseMatrix wedge_sums;                // R = E A, maintained incrementally
  DenseVector support;                    // number of 2s per row of R
  std::vector<std::size_t> live_edge_ids; // live row -> row of the input incidence
  std::size_t round = 0;                  // 0 before any removal
};

struct TrussResult {
  int k = 2;
  EdgeList surviving_edges;
  std::vector<std::size_t> surviving_ids;  // rows of the input incidence, ascending
  std::vector<int> per_edge_max_k;         // by input row; filled in decomposition mode
};

using RoundObserver = std::function<void(const TrussState&)>;

namespace detail {

inline DenseVector support_from_wedge_sums(const SparseMatrix& r) {
  return row_reduce(filter_eq(r, 2));
}

}  // namespace detail

/// Triangles through each edge: the count of 2s in each row of E A.
inline DenseVector compute_support(const SparseMatrix& e_mat) {
  check_incidence(e_mat);
  return detail::support_from_wedge_sums(spgemm(e_mat, adjacency_from_incidence(e_mat)));
}

/// Maximal subgraph in which every edge lies on at least k - 2 triangles.
/// The observer, when given, sees the state after setup and after every
/// removal round.
inline TrussResult ktruss(const SparseMatrix& e_mat, int k, const RoundObserver& observer = {}) {
  if (k < 2) throw ContractError("ktruss: k must be at least 2, got " + std::to_string(k));
  check_incidence(e_mat);

  TrussState st;
  st.live_edge_ids.resize(e_mat.nrows());
  std::iota(st.live_edge_ids.begin(), st.live_edge_ids.end(), std::size_t{0});

  auto finish = [&](const SparseMatrix& e) {
    TrussResult res;
    res.k = k;
    res.surviving_edges = edge_list_from_incidence(e);
    res.surviving_ids = st.live_edge_ids;
    return res;
  };
  // Every graph is its own 2-truss.
  if (k == 2) return finish(e_mat);

  const Value threshold = k - 2;
  const DenseVector degrees = col_reduce(e_mat);
  const SparseMatrix adjacency = subtract(spgemm(transpose(e_mat), e_mat), diag_from_vector(degrees));
  st.incidence = e_mat;
  st.wedge_sums = spgemm(st.incidence, adjacency);
  st.support = detail::support_from_wedge_sums(st.wedge_sums);
  if (observer) observer(st);

  std::vector<std::size_t> removed, kept;
  auto partition = [&] {
    removed.clear();
    kept.clear();
    for (std::size_t i = 0; i < st.support.size(); ++i) {
      (st.support[i] < threshold ? removed : kept).push_back(i);
    }
  };

  partition();
  while (!removed.empty()) {
    const SparseMatrix gone = select_rows(st.incidence, removed);
    st.incidence = select_rows(st.incidence, kept);
    const DenseVector gone_degrees = col_reduce(gone);
    const SparseMatrix adjacency_drop =
        subtract(spgemm(transpose(gone), gone), diag_from_vector(gone_degrees));
    st.wedge_sums = subtract(select_rows(st.wedge_sums, kept), spgemm(st.incidence, adjacency_drop));
    st.support = detail::support_from_wedge_sums(st.wedge_sums);

    std::vector<std::size_t> ids;
    ids.reserve(kept.size());
    for (std::size_t i : kept) ids.push_back(st.live_edge_ids[i]);
    st.live_edge_ids = std::move(ids);
    ++st.round;
    if (observer) observer(st);
    partition();
  }
  return finish(st.incidence);
}

/// Trussness of every edge: the largest k whose k-truss still holds it.
/// Edges on no triangle get 2. The returned surviving set is the innermost
/// non-empty truss, with k its order.
inline TrussResult truss_decomposition(const SparseMatrix& e_mat) {
  check_incidence(e_mat);
  TrussResult out;
  out.per_edge_max_k.assign(e_mat.nrows(), 2);
  out.k = 2;
  out.surviving_edges = edge_list_from_incidence(e_mat);
  out.surviving_ids.resize(e_mat.nrows());
  std::iota(out.surviving_ids.begin(), out.surviving_ids.end(), std::size_t{0});

  SparseMatrix current = e_mat;
  std::vector<std::size_t> current_ids = out.surviving_ids;
  for (int k = 3; current.nrows() > 0; ++k) {
    TrussResult step = ktruss(current, k);
    if (step.surviving_ids.empty()) break;
    std::vector<std::size_t> ids;
    ids.reserve(step.surviving_ids.size());
    for (std::size_t local : step.surviving_ids) {
      ids.push_back(current_ids[local]);
      out.per_edge_max_k[current_ids[local]] = k;
    }
    current = select_rows(current, step.surviving_ids);
    current_ids = std::move(ids);
    out.k = k;
    out.surviving_edges = std::move(step.surviving_edges);
    out.surviving_ids = current_ids;
  }
  return out;
}

/// Reference k-truss: recomputes every support from scratch with bitset
/// neighbourhood intersection and removes one violating edge (lowest
/// support, then lowest pair) at a time. Independent of the matrix code.
inline TrussResult oracle_ktruss(const Graph& g, int k) {
  if (k < 2) throw ContractError("oracle_ktruss: k must be at least 2, got " + std::to_string(k));
  const std::size_t n = g.num_vertices();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> bits(n * words, 0);
  auto set = [&](std::size_t a, std::size_t b, bool on) {
    auto& w = bits[a * words + b / 64];
    const std::uint64_t mask = std::uint64_t{1} << (b % 64);
    w = on ? (w | mask) : (w & ~mask);
  };
  const auto& all = g.edge_list().edges();
  std::vector<bool> alive(all.size(), true);
  for (const Edge& e : all) {
    set(e.u, e.v, true);
    set(e.v, e.u, true);
  }
  const long threshold = k - 2;
  while (true) {
    long best_support = std::numeric_limits<long>::max();
    std::size_t best = all.size();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!alive[i]) continue;
      long common = 0;
      for (std::size_t w = 0; w < words; ++w) {
        common += std::popcount(bits[all[i].u * words + w] & bits[all[i].v * words + w]);
      }
      if (common < threshold && common < best_support) {
        best_support = common;
        best = i;
      }
    }
    if (best == all.size()) break;
    alive[best] = false;
    set(all[best].u, all[best].v, false);
    set(all[best].v, all[best].u, false);
  }
  TrussResult res;
  res.k = k;
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (alive[i]) {
      kept.push_back(all[i]);
      res.surviving_ids.push_back(i);
    }
  }
  res.surviving_edges = EdgeList(n, std::move(kept));
  return res;
}

}  // namespace spgraph

#endif  // SPGRAPH_KTRUSS_HPP
