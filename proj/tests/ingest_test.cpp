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

#include "spgraph/ingest.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <sstream>

#include "test_support.hpp"

namespace spgraph {
namespace {

RawTriples tsv(const std::string& text) {
  std::istringstream in(text);
  return parse_tsv(in);
}

RawTriples mmio(const std::string& text) {
  std::istringstream in(text);
  return parse_mmio(in);
}

std::string to_tsv(const Graph& g) {
  std::ostringstream out;
  write_tsv(g, out);
  return out.str();
}

std::string to_mmio(const Graph& g) {
  std::ostringstream out;
  write_mmio(g, out);
  return out.str();
}

std::size_t error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

TEST(ParseTsv, Examples) {
  EXPECT_EQ(tsv("1\t2\t1\n2\t1\t1\n").triples, (std::vector<RawTriple>{{1, 2, 1}, {2, 1, 1}}));
  EXPECT_TRUE(tsv("").triples.empty());
  EXPECT_EQ(tsv("3\t3\t1\n").triples, (std::vector<RawTriple>{{3, 3, 1}}));
}

TEST(ParseTsv, LineEndingsAndWeights) {
  EXPECT_EQ(tsv("1\t2\t1\r\n2\t3\t7").triples,
            (std::vector<RawTriple>{{1, 2, 1}, {2, 3, 7}}));
  EXPECT_FALSE(tsv("1\t2\t1\n").declared_n.has_value());
}

TEST(ParseTsv, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line([] { tsv("1\t2\t1\n1\t2\n"); }), 2u);
  EXPECT_EQ(error_line([] { tsv("1\t2\t1\t4\n"); }), 1u);
  EXPECT_EQ(error_line([] { tsv("1\t2\t1\nx\t2\t1\n"); }), 2u);
  EXPECT_EQ(error_line([] { tsv("0\t2\t1\n"); }), 1u);
  EXPECT_EQ(error_line([] { tsv("1\t-2\t1\n"); }), 1u);
  EXPECT_EQ(error_line([] { tsv("1 2 1\n"); }), 1u);
  EXPECT_EQ(error_line([] { tsv("1\t2\t1.5\n"); }), 1u);
  EXPECT_EQ(error_line([] { tsv("1\t99999999999\t1\n"); }), 1u);
}

TEST(ParseMmio, SymmetricPatternExpands) {
  const auto raw = mmio(
      "%%MatrixMarket matrix coordinate pattern symmetric\n"
      "% a comment\n"
      "2 2 1\n"
      "2 1\n");
  EXPECT_EQ(raw.triples, (std::vector<RawTriple>{{2, 1, 1}, {1, 2, 1}}));
  EXPECT_EQ(raw.declared_n, 2u);
}

TEST(ParseMmio, GeneralKeepsBothOrientations) {
  const auto raw = mmio(
      "%%MatrixMarket matrix coordinate integer general\n"
      "3 3 2\n"
      "1 2 5\n"
      "2 1 5\n");
  EXPECT_EQ(raw.triples, (std::vector<RawTriple>{{1, 2, 5}, {2, 1, 5}}));
  EXPECT_EQ(normalize(raw).num_edges(), 1u);
}

TEST(ParseMmio, HeaderOnly) {
  const auto raw = mmio("%%MatrixMarket matrix coordinate pattern general\n7 5 0\n");
  EXPECT_TRUE(raw.triples.empty());
  EXPECT_EQ(raw.declared_n, 7u);
  EXPECT_EQ(normalize(raw).num_vertices(), 7u);
}

TEST(ParseMmio, RealValuesAndCrlf) {
  const auto raw = mmio(
      "%%MatrixMarket matrix coordinate real general\r\n"
      "3 3 1\r\n"
      "3 1 2.5e0\r\n");
  ASSERT_EQ(raw.triples.size(), 1u);
  EXPECT_EQ(raw.triples[0].u, 3u);
}

TEST(ParseMmio, Errors) {
  EXPECT_THROW(mmio(""), ParseError);
  EXPECT_THROW(mmio("%%MatrixMarket matrix array real general\n2 2\n"), ParseError);
  EXPECT_THROW(mmio("%%MatrixMarket matrix coordinate complex general\n"), ParseError);
  EXPECT_THROW(mmio("%%MatrixMarket matrix coordinate pattern hermitian\n"), ParseError);
  EXPECT_THROW(mmio("%MatrixMarket matrix coordinate pattern general\n1 1 0\n"), ParseError);
  EXPECT_THROW(mmio("%%MatrixMarket matrix coordinate pattern general\n"), ParseError);
  // Entry count mismatch in both directions.
  EXPECT_EQ(error_line([] {
              mmio("%%MatrixMarket matrix coordinate pattern general\n3 3 2\n1 2\n");
            }),
            3u);
  EXPECT_EQ(error_line([] {
              mmio("%%MatrixMarket matrix coordinate pattern general\n3 3 1\n1 2\n2 3\n");
            }),
            4u);
  // Index beyond the declared dimensions.
  EXPECT_EQ(error_line([] {
              mmio("%%MatrixMarket matrix coordinate pattern general\n3 3 1\n4 1\n");
            }),
            3u);
  // Pattern entries carry no value field.
  EXPECT_THROW(mmio("%%MatrixMarket matrix coordinate pattern general\n3 3 1\n1 2 1\n"),
               ParseError);
}

TEST(Normalize, Examples) {
  const Graph a = normalize({{{1, 2, 1}, {2, 1, 1}, {3, 3, 1}}, std::nullopt});
  EXPECT_EQ(a.edge_list().edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(a.num_vertices(), 3u);

  const Graph b = normalize({{{2, 3, 1}}, std::nullopt});
  EXPECT_EQ(b.edge_list().edges(), (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(b.num_vertices(), 3u);

  const Graph c = normalize({});
  EXPECT_EQ(c.num_vertices(), 0u);
  EXPECT_EQ(c.num_edges(), 0u);
}

TEST(Normalize, VertexCountOverride) {
  EXPECT_EQ(normalize({{{1, 2, 1}}, std::nullopt}, 10).num_vertices(), 10u);
  EXPECT_THROW(normalize({{{1, 5, 1}}, std::nullopt}, 3), ContractError);
}

TEST(Normalize, IdempotentAndClean) {
  for (const auto& c : testing::random_suite(50)) {
    const Graph g = testing::random_graph(c);
    RawTriples raw;
    for (const Edge& e : g.edge_list().edges()) {
      raw.triples.push_back({e.u + 1u, e.v + 1u, 1});
      raw.triples.push_back({e.v + 1u, e.u + 1u, 3});
      raw.triples.push_back({e.u + 1u, e.u + 1u, 1});
    }
    raw.declared_n = g.num_vertices();
    const Graph once = normalize(raw);
    EXPECT_EQ(once, g);

    std::istringstream in(to_tsv(once));
    RawTriples again = parse_tsv(in);
    again.declared_n = g.num_vertices();
    EXPECT_EQ(normalize(again), once);
  }
}

TEST(WriteTsv, GoldenSingleEdge) {
  EXPECT_EQ(to_tsv(testing::make_graph(2, {{0, 1}})), "1\t2\t1\n2\t1\t1\n");
}

TEST(WriteTsv, BothOrientationsPerEdge) {
  const std::string text = to_tsv(testing::k3());
  EXPECT_EQ(text, "1\t2\t1\n1\t3\t1\n2\t1\t1\n2\t3\t1\n3\t1\t1\n3\t2\t1\n");
}

TEST(WriteMmio, Examples) {
  EXPECT_EQ(to_mmio(Graph(EdgeList(3, {}))),
            "%%MatrixMarket matrix coordinate pattern symmetric\n3 3 0\n");
  EXPECT_EQ(to_mmio(testing::k3()),
            "%%MatrixMarket matrix coordinate pattern symmetric\n3 3 3\n2 1\n3 1\n3 2\n");
}

TEST(RoundTrip, TsvAndMmioOnRandomGraphs) {
  for (const auto& c : testing::random_suite(50, 50)) {
    const Graph g = testing::random_graph(c);
    std::istringstream t(to_tsv(g));
    EXPECT_EQ(normalize(parse_tsv(t), g.num_vertices()), g) << "seed " << c.seed;
    std::istringstream m(to_mmio(g));
    EXPECT_EQ(normalize(parse_mmio(m)), g) << "seed " << c.seed;
  }
}

TEST(Format, Parsing) {
  EXPECT_EQ(parse_format("tsv"), Format::tsv);
  EXPECT_EQ(parse_format("mmio"), Format::mmio);
  EXPECT_FALSE(parse_format("csv").has_value());
  EXPECT_EQ(format_from_path("data/wiki-Vote_adj.tsv"), Format::tsv);
  EXPECT_EQ(format_from_path("graph.mtx"), Format::mmio);
  EXPECT_FALSE(format_from_path("graph").has_value());
}

}  // namespace
}  // namespace spgraph
