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

// Reference values published alongside the benchmark datasets. These are
// copied verbatim, not computed.

#ifndef SPGRAPH_REFERENCE_DATA_HPP
#define SPGRAPH_REFERENCE_DATA_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace spgraph::reference {

struct GridRow {
  unsigned exponent;            // M = 2^exponent
  std::uint64_t nodes;
  std::uint64_t edges;
  std::uint64_t triangles;      // as published; see published_grid_triangle_factor
};

inline constexpr std::array<GridRow, 6> grid_table{{
    {8, 65536, 260610, 520200},
    {9, 262144, 1045506, 2088968},
    {10, 1048576, 4188162, 8372232},
    {11, 4194304, 16764930, 33521672},
    {12, 16777216, 67084290, 134152200},
    {13, 67108864, 268386306, 536739848},
}};

// The published grid triangle column is 8(M-1)^2, twice the undirected
// count. Tests pin this ratio against the oracle-confirmed count.
inline constexpr std::uint64_t published_grid_triangle_factor = 2;

struct SnapRow {
  std::string_view name;
  std::uint64_t stored_edges;   // entries in the published TSV (both orientations)
  std::uint64_t triangles;
};

inline constexpr std::array<SnapRow, 7> snap_table{{
    {"cit-HepTh-dates", 38488, 1418},
    {"wiki-Vote", 201524, 608389},
    {"email-Enron", 367662, 727044},
    {"soc-sign-epinions", 1422420, 4910076},
    {"flickrEdges", 4633896, 107987357},
    {"web-Google", 8644102, 13391903},
    {"cit-Patents", 33037894, 7515023},
}};

inline std::optional<GridRow> find_grid(unsigned exponent) {
  for (const auto& row : grid_table) {
    if (row.exponent == exponent) return row;
  }
  return std::nullopt;
}

/// Matches a dataset name such as "wiki-Vote" or "wiki-Vote_adj". The
/// longest matching prefix wins, so "cit-HepTh-dates" is not taken for a
/// shorter name.
inline std::optional<SnapRow> find_snap(std::string_view dataset) {
  std::optional<SnapRow> best;
  for (const auto& row : snap_table) {
    if (!dataset.starts_with(row.name)) continue;
    const auto rest = dataset.substr(row.name.size());
    if (!rest.empty() && rest.front() != '_' && rest.front() != '.') continue;
    if (!best || row.name.size() > best->name.size()) best = row;
  }
  return best;
}

}  // namespace spgraph::reference

#endif  // SPGRAPH_REFERENCE_DATA_HPP
