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

#include "spgraph/bench.hpp"

#include <gtest/gtest.h>

#include <charconv>
#include <sstream>
#include <thread>

#include "spgraph/generator.hpp"
#include "test_support.hpp"

namespace spgraph::bench {
namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, sep)) out.push_back(field);
  return out;
}

double parse_double(const std::string& s) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  EXPECT_EQ(ec, std::errc{}) << s;
  EXPECT_EQ(ptr, s.data() + s.size()) << s;
  return v;
}

Config quick(Kernel kernel = Kernel::triangles) {
  Config c;
  c.dataset = "test";
  c.kernel = kernel;
  c.repetitions = 3;
  c.processor = "test cpu";
  return c;
}

TEST(Verify, Counts) {
  EXPECT_EQ(verify(std::uint64_t{608389}, std::uint64_t{608389}).status, Status::verified);
  const Verdict bad = verify(std::uint64_t{4}, std::uint64_t{5});
  EXPECT_EQ(bad.status, Status::failed);
  EXPECT_NE(bad.detail.find("got 4"), std::string::npos);
  EXPECT_NE(bad.detail.find("expected 5"), std::string::npos);
}

TEST(Verify, EdgeSetsIgnoreOrderAndOrientation) {
  const std::vector<Edge> a = {{0, 1}, {1, 2}, {0, 2}};
  const std::vector<Edge> b = {{2, 1}, {0, 2}, {1, 0}};
  EXPECT_EQ(verify(a, b).status, Status::verified);
  const std::vector<Edge> c = {{0, 1}, {1, 2}};
  const Verdict v = verify(a, c);
  EXPECT_EQ(v.status, Status::failed);
  EXPECT_NE(v.detail.find("1 unexpected, 0 missing"), std::string::npos) << v.detail;
}

TEST(Verify, TrussMaps) {
  const TrussMap a = {{{0, 1}, 3}, {{1, 2}, 2}};
  TrussMap b = a;
  EXPECT_EQ(verify(a, b).status, Status::verified);
  b[{1, 2}] = 3;
  b[{2, 3}] = 2;
  const Verdict v = verify(a, b);
  EXPECT_EQ(v.status, Status::failed);
  EXPECT_NE(v.detail.find("2 edges"), std::string::npos) << v.detail;
}

TEST(RunBenchmark, TrianglesOnGridVerifiedByOracle) {
  const Graph g = grid_graph(GridSpec::from_exponent(3));
  Config c = quick();
  c.expected = oracle_enumerate(g, false).count.count;
  const MetricsRecord r = run_benchmark(g, g.num_edges(), c);
  EXPECT_EQ(r.status, Status::verified);
  EXPECT_EQ(r.triangle_count, grid_triangle_count(8));
  EXPECT_EQ(r.edges, analytic_edge_count(8));
  EXPECT_EQ(r.rep_seconds.size(), 3u);
  EXPECT_LE(r.min_seconds, r.mean_seconds);
  EXPECT_LE(r.mean_seconds, r.max_seconds);
  EXPECT_EQ(r.processor, "test cpu");
  EXPECT_GT(r.peak_memory_bytes, 0u);
  EXPECT_FALSE(r.memory_method.empty());
  EXPECT_FALSE(r.energy_joules.has_value());
}

TEST(RunBenchmark, EveryTriangleAlgorithmAgrees) {
  const Graph g = testing::erdos_renyi(40, 0.3, 4);
  const std::uint64_t want = oracle_enumerate(g, false).count.count;
  for (auto a : {TriangleAlgorithm::hadamard_square, TriangleAlgorithm::lu_masked,
                 TriangleAlgorithm::adjacency_incidence, TriangleAlgorithm::oracle}) {
    Config c = quick();
    c.algorithm = a;
    c.expected = want;
    const auto r = run_benchmark(g, g.num_edges(), c);
    EXPECT_EQ(r.status, Status::verified) << to_string(a);
    EXPECT_EQ(r.algorithm, to_string(a));
  }
}

TEST(RunBenchmark, WrongExpectationFails) {
  const Graph g = testing::k4();
  Config c = quick();
  c.expected = std::uint64_t{5};
  const auto r = run_benchmark(g, g.num_edges(), c);
  EXPECT_EQ(r.status, Status::failed);
  EXPECT_EQ(exit_code({r}), 1);
  c.expected = EdgeList(4, {});
  EXPECT_EQ(run_benchmark(g, g.num_edges(), c).status, Status::failed);
}

TEST(RunBenchmark, UnverifiedWithoutExpectation) {
  const auto r = run_benchmark(testing::k4(), 6, quick());
  EXPECT_EQ(r.status, Status::unverified);
  EXPECT_EQ(exit_code({r}), 0);
}

TEST(RunBenchmark, KtrussAndDecomposition) {
  const Graph g = testing::erdos_renyi(30, 0.3, 12);
  Config c = quick(Kernel::ktruss);
  c.k = 4;
  c.expected = oracle_ktruss(g, 4).surviving_edges;
  EXPECT_EQ(run_benchmark(g, g.num_edges(), c).status, Status::verified);

  Config d = quick(Kernel::truss);
  std::vector<int> levels(g.num_edges(), 2);
  for (int k = 3; k < 12; ++k) {
    for (std::size_t id : oracle_ktruss(g, k).surviving_ids) levels[id] = k;
  }
  d.expected = truss_map(g.edge_list(), levels);
  EXPECT_EQ(run_benchmark(g, g.num_edges(), d).status, Status::verified);

  c.k = 1;
  EXPECT_THROW(run_benchmark(g, g.num_edges(), c), ContractError);
  Config zero = quick();
  zero.repetitions = 0;
  EXPECT_THROW(run_benchmark(g, g.num_edges(), zero), ContractError);
}

TEST(RunBenchmark, RateIsEdgesOverMean) {
  const Graph g = grid_graph(GridSpec::from_exponent(6));
  const auto r = run_benchmark(g, g.num_edges(), quick());
  ASSERT_TRUE(r.rate.has_value());
  EXPECT_DOUBLE_EQ(*r.rate, static_cast<double>(r.edges) / r.mean_seconds);
}

TEST(RunBenchmark, EmptyGraphHasNoRate) {
  const Graph g(EdgeList(10, {}));
  Config c = quick();
  c.expected = std::uint64_t{0};
  const auto r = run_benchmark(g, 0, c);
  EXPECT_EQ(r.status, Status::verified);
  EXPECT_EQ(r.edges, 0u);
  // Counting nothing finishes well under a microsecond.
  if (r.mean_seconds < 1e-6) {
    EXPECT_FALSE(r.rate.has_value());
  }
}

// A stream that sleeps before handing out every line, so a slow load shows up
// in wall time but must not show up in the per-repetition timings.
class SlowBuf : public std::streambuf {
 public:
  SlowBuf(std::string text, std::chrono::milliseconds delay) : text_(std::move(text)), delay_(delay) {}

 protected:
  int_type underflow() override {
    if (pos_ >= text_.size()) return traits_type::eof();
    std::this_thread::sleep_for(delay_);
    const std::size_t end = std::min(text_.find('\n', pos_) + 1, text_.size());
    line_ = text_.substr(pos_, end - pos_);
    pos_ = end;
    setg(line_.data(), line_.data(), line_.data() + line_.size());
    return traits_type::to_int_type(line_[0]);
  }

 private:
  std::string text_;
  std::string line_;
  std::size_t pos_ = 0;
  std::chrono::milliseconds delay_;
};

TEST(RunBenchmark, IngestIsNotTimed) {
  std::ostringstream file;
  write_tsv(testing::k4(), file);
  SlowBuf buf(file.str(), std::chrono::milliseconds(20));
  std::istream in(&buf);
  const auto start = std::chrono::steady_clock::now();
  Config c = quick();
  c.expected = std::uint64_t{4};
  const auto r = run_benchmark(in, Format::tsv, c);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_GE(wall, 12 * 0.02);  // twelve stored entries, one sleep each
  EXPECT_LT(r.max_seconds, 0.02);
  EXPECT_EQ(r.edges, 12u);  // stored entries, both orientations
  EXPECT_EQ(r.undirected_edges, 6u);
  EXPECT_EQ(r.status, Status::verified);
}

TEST(EmitReport, CsvColumnsAndRoundTrip) {
  const Graph g = grid_graph(GridSpec::from_exponent(4));
  Config c = quick();
  c.dataset = "grid, quoted";
  c.energy_joules = 1.5;
  const auto r = run_benchmark(g, g.num_edges(), c);
  std::ostringstream out;
  emit_report({r, r}, ReportFormat::csv, out);
  std::istringstream in(out.str());
  std::string header, row;
  std::getline(in, header);
  EXPECT_EQ(header,
            "dataset,kernel,algorithm,edges,mean_seconds,rate,memory,energy,processor,status,"
            "reps,min_seconds,max_seconds,undirected_edges,memory_method,result");
  std::getline(in, row);
  ASSERT_EQ(row.rfind("\"grid, quoted\",", 0), 0u) << row;
  const auto fields = split(row.substr(std::string("\"grid, quoted\",").size()), ',');
  ASSERT_EQ(fields.size(), 15u);
  EXPECT_EQ(fields[0], "triangles");
  EXPECT_EQ(fields[1], "hadamard");
  EXPECT_EQ(fields[2], std::to_string(g.num_edges()));
  EXPECT_EQ(parse_double(fields[3]), r.mean_seconds);
  ASSERT_TRUE(r.rate.has_value());
  EXPECT_EQ(parse_double(fields[4]), *r.rate);
  EXPECT_EQ(fields[6], "1.5");
  EXPECT_EQ(fields[8], "unverified");
  EXPECT_EQ(fields[9], "3");
  EXPECT_EQ(fields[14], std::to_string(grid_triangle_count(16)));
  std::string third;
  EXPECT_TRUE(std::getline(in, third));
  EXPECT_FALSE(std::getline(in, third));
}

TEST(EmitReport, JsonCarriesNullsAndRepetitions) {
  MetricsRecord r;
  r.dataset = "empty";
  r.repetitions = 2;
  r.rep_seconds = {0.0, 0.0};
  std::ostringstream out;
  emit_report({r}, ReportFormat::json, out);
  const auto j = nlohmann::ordered_json::parse(out.str());
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 1u);
  EXPECT_TRUE(j[0]["rate"].is_null());
  EXPECT_TRUE(j[0]["energy"].is_null());
  EXPECT_EQ(j[0]["rep_seconds"].size(), 2u);
  EXPECT_EQ(j[0]["status"], "unverified");
  EXPECT_EQ(j[0].begin().key(), "dataset");
}

TEST(EmitReport, TableAndEmpty) {
  MetricsRecord r;
  r.dataset = "x";
  std::ostringstream out;
  emit_report({r}, ReportFormat::table, out);
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("dataset", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
  std::ostringstream sink;
  EXPECT_THROW(emit_report({}, ReportFormat::csv, sink), ContractError);
  EXPECT_EQ(parse_report_format("json"), ReportFormat::json);
  EXPECT_FALSE(parse_report_format("xml").has_value());
}

TEST(ExitCode, AnyFailureIsOne) {
  MetricsRecord ok, bad;
  bad.status = Status::failed;
  EXPECT_EQ(exit_code({ok}), 0);
  EXPECT_EQ(exit_code({ok, bad}), 1);
}

}  // namespace
}  // namespace spgraph::bench
