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

// Synthetic image-grid graphs: an M x M pixel grid where every pixel is
// joined to its in-bounds 8-neighbourhood. Pixel (r, c) is vertex r * M + c.

#ifndef SPGRAPH_GENERATOR_HPP
#define SPGRAPH_GENERATOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spgraph/error.hpp"
#include "spgraph/graph.hpp"

namespace spgraph {

class GridSpec {
 public:
  static GridSpec from_side(std::uint64_t side) {
    if (side < 2) throw ContractError("grid side must be at least 2, got " + std::to_string(side));
    // M^2 vertices must fit 32-bit ids.
    if (side > 65535) throw ContractError("grid side " + std::to_string(side) + " is too large");
    return GridSpec(side);
  }

  /// Side 2^exponent.
  static GridSpec from_exponent(unsigned exponent) {
    if (exponent < 1 || exponent > 15) {
      throw ContractError("grid exponent must be in [1, 15], got " + std::to_string(exponent));
    }
    return GridSpec(std::uint64_t{1} << exponent);
  }

  std::uint64_t side() const noexcept { return side_; }
  std::uint64_t num_vertices() const noexcept { return side_ * side_; }

 private:
  explicit GridSpec(std::uint64_t side) : side_(side) {}
  std::uint64_t side_;
};

/// Closed form 2(M-1)(2M-1): M(M-1) horizontal, M(M-1) vertical and
/// 2(M-1)^2 diagonal edges.
inline std::uint64_t analytic_edge_count(std::uint64_t side) {
  if (side < 2) throw ContractError("grid side must be at least 2");
  return 2 * (side - 1) * (2 * side - 1);
}

/// Closed form 4(M-1)^2: every 2x2 pixel block is a K4 holding four
/// triangles, and three mutually adjacent pixels always share one block.
/// The oracle-backed tests confirm it on small grids.
inline std::uint64_t grid_triangle_count(std::uint64_t side) {
  if (side < 2) throw ContractError("grid side must be at least 2");
  return 4 * (side - 1) * (side - 1);
}

inline Graph grid_graph(const GridSpec& spec) {
  const std::uint64_t m = spec.side();
  std::vector<Edge> edges;
  edges.reserve(analytic_edge_count(m));
  // Forward neighbours of (r, c) in increasing id order: (r, c+1),
  // (r+1, c-1), (r+1, c), (r+1, c+1). Row-major emission is already canonical.
  for (std::uint64_t r = 0; r < m; ++r) {
    for (std::uint64_t c = 0; c < m; ++c) {
      const auto id = static_cast<VertexId>(r * m + c);
      if (c + 1 < m) edges.push_back({id, static_cast<VertexId>(id + 1)});
      if (r + 1 < m) {
        const auto below = static_cast<VertexId>(id + m);
        if (c > 0) edges.push_back({id, static_cast<VertexId>(below - 1)});
        edges.push_back({id, below});
        if (c + 1 < m) edges.push_back({id, static_cast<VertexId>(below + 1)});
      }
    }
  }
  return Graph(EdgeList(spec.num_vertices(), std::move(edges)));
}

}  // namespace spgraph

#endif  // SPGRAPH_GENERATOR_HPP
