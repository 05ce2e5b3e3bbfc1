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

// spgraph command line.
//
//   spgraph generate  --grid-exponent n [--out file] [--format tsv|mmio]
//   spgraph convert   --from tsv|mmio --to tsv|mmio --input file [--out file]
//   spgraph triangles --algorithm hadamard|lu|incidence|oracle|all --input file
//   spgraph ktruss    --k K --input file [--decompose] [--out file]
//   spgraph truss     --input file [--out file]
//   spgraph bench     (--input file | --grid-exponent n) [--kernel ...] [--reps N]
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spgraph/spgraph.hpp"

namespace {

using namespace spgraph;

constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string input;
  std::string format;
  std::optional<std::size_t> n_override;

  void attach(CLI::App* app, bool required = true) {
    auto* opt = app->add_option("--input,-i", input, "Input graph file");
    if (required) opt->required();
    app->add_option("--format,-f", format, "Input format: tsv or mmio (default: from extension)")
        ->check(CLI::IsMember({"tsv", "mmio"}));
    app->add_option("--n", n_override, "Vertex count override");
  }

  Format resolve_format() const {
    if (!format.empty()) return *parse_format(format);
    if (auto f = format_from_path(input)) return *f;
    throw UsageError("cannot infer the format of '" + input + "'; pass --format");
  }

  LoadedGraph load() const { return load_graph(input, resolve_format(), n_override); }
};

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::optional<std::uint64_t> parse_count(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open expected-value file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --expect accepts a literal count or a file: a count for triangles, a TSV
// edge list for ktruss, "u<TAB>v<TAB>max_k" lines for a decomposition.
bench::Expected load_expected(bench::Kernel kernel, const std::string& arg, std::size_t n) {
  if (auto v = parse_count(arg)) {
    if (kernel != bench::Kernel::triangles) {
      throw UsageError("a literal --expect value only applies to triangle counts");
    }
    return *v;
  }
  switch (kernel) {
    case bench::Kernel::triangles: {
      std::string text = slurp(arg);
      while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
      if (auto v = parse_count(text)) return *v;
      throw UsageError("expected-value file '" + arg + "' does not hold a single count");
    }
    case bench::Kernel::ktruss: {
      std::ifstream in(arg, std::ios::binary);
      if (!in) throw UsageError("cannot open expected edge list '" + arg + "'");
      RawTriples raw = parse_tsv(in);
      raw.declared_n = n;
      return normalize(raw).edge_list();
    }
    case bench::Kernel::truss: {
      std::ifstream in(arg, std::ios::binary);
      if (!in) throw UsageError("cannot open expected trussness table '" + arg + "'");
      bench::TrussMap map;
      for (const RawTriple& t : parse_tsv(in).triples) {
        Edge e{static_cast<VertexId>(t.u - 1), static_cast<VertexId>(t.v - 1)};
        if (e.u > e.v) std::swap(e.u, e.v);
        map[e] = static_cast<int>(t.w);
      }
      return map;
    }
  }
  throw UsageError("unsupported kernel");
}

std::string dataset_name(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

void write_decomposition(const EdgeList& edges, const std::vector<int>& max_k, std::ostream& out) {
  for (std::size_t i = 0; i < edges.num_edges(); ++i) {
    out << edges[i].u + 1 << '\t' << edges[i].v + 1 << '\t' << max_k[i] << '\n';
  }
}

int run_generate(unsigned exponent, std::optional<std::uint64_t> side, const std::string& out_path,
                 const std::string& format) {
  const GridSpec spec = side ? GridSpec::from_side(*side) : GridSpec::from_exponent(exponent);
  const Graph g = grid_graph(spec);
  Output out(out_path);
  write(g, out.stream(), *parse_format(format));
  std::cerr << "grid M=" << spec.side() << ": " << g.num_vertices() << " vertices, "
            << g.num_edges() << " edges\n";
  return 0;
}

int run_convert(const InputOptions& in, const std::string& to, const std::string& out_path) {
  const LoadedGraph loaded = in.load();
  Output out(out_path);
  write(loaded.graph, out.stream(), *parse_format(to));
  return 0;
}

int run_triangles(const InputOptions& in, const std::string& algorithm, bool enumerate,
                  const std::string& expect) {
  const Graph g = in.load().graph;
  std::vector<TriangleAlgorithm> algorithms;
  if (algorithm == "all") {
    algorithms = {TriangleAlgorithm::hadamard_square, TriangleAlgorithm::lu_masked,
                  TriangleAlgorithm::adjacency_incidence, TriangleAlgorithm::oracle};
  } else {
    algorithms = {*parse_triangle_algorithm(algorithm)};
  }

  std::optional<std::uint64_t> agreed;
  bool disagreement = false;
  for (TriangleAlgorithm a : algorithms) {
    if (a == TriangleAlgorithm::oracle && algorithm == "all" && g.num_vertices() > 5000) {
      std::cout << "oracle\tskipped (n > 5000)\n";
      continue;
    }
    const TriangleCount c = count_triangles(g, a);
    std::cout << to_string(a) << '\t' << c.count << '\n';
    if (agreed && *agreed != c.count) disagreement = true;
    agreed = c.count;
  }
  if (disagreement) {
    std::cerr << "error: triangle algorithms disagree\n";
    return kVerificationFailure;
  }
  if (enumerate) {
    std::vector<TriangleRecord> cells;
    count_incidence(g.adjacency(), g.incidence(), &cells);
    std::vector<TriangleRecord> triangles;
    for (const auto& c : cells) {
      if (c.apex < c.x) triangles.push_back(c);
    }
    std::sort(triangles.begin(), triangles.end());
    for (const auto& t : triangles) {
      std::cout << t.apex + 1 << '\t' << t.x + 1 << '\t' << t.y + 1 << '\n';
    }
  }
  if (!expect.empty()) {
    const auto want = std::get<std::uint64_t>(load_expected(bench::Kernel::triangles, expect, 0));
    const bench::Verdict v = bench::verify(*agreed, want);
    std::cerr << to_string(v.status) << ": " << v.detail << '\n';
    if (v.status == bench::Status::failed) return kVerificationFailure;
  }
  return 0;
}

int run_ktruss(const InputOptions& in, int k, bool decompose, const std::string& out_path,
               const std::string& expect) {
  const Graph g = in.load().graph;
  Output out(out_path);
  if (decompose) {
    const TrussResult res = truss_decomposition(g.incidence());
    write_decomposition(g.edge_list(), res.per_edge_max_k, out.stream());
    std::cerr << "max trussness " << res.k << " (" << res.surviving_edges.num_edges()
              << " edges)\n";
    if (!expect.empty()) {
      const auto want = std::get<bench::TrussMap>(
          load_expected(bench::Kernel::truss, expect, g.num_vertices()));
      const auto v = bench::verify(bench::truss_map(g.edge_list(), res.per_edge_max_k), want);
      std::cerr << to_string(v.status) << ": " << v.detail << '\n';
      if (v.status == bench::Status::failed) return kVerificationFailure;
    }
    return 0;
  }
  const TrussResult res = ktruss(g.incidence(), k);
  write_tsv(Graph(res.surviving_edges), out.stream());
  std::cerr << k << "-truss: " << res.surviving_edges.num_edges() << " of " << g.num_edges()
            << " edges\n";
  if (!expect.empty()) {
    const auto want =
        std::get<EdgeList>(load_expected(bench::Kernel::ktruss, expect, g.num_vertices()));
    const auto v = bench::verify(res.surviving_edges.edges(), want.edges());
    std::cerr << to_string(v.status) << ": " << v.detail << '\n';
    if (v.status == bench::Status::failed) return kVerificationFailure;
  }
  return 0;
}

struct BenchOptions {
  InputOptions input;
  std::optional<unsigned> grid_exponent;
  std::string kernel = "triangles";
  std::string algorithm = "hadamard";
  int k = 3;
  std::size_t reps = 100;
  std::string report = "csv";
  std::string expect;
  bool expect_oracle = false;
  std::optional<double> energy;
  std::optional<std::string> processor;
  std::string dataset;
  std::string out;
};

int run_bench(const BenchOptions& o) {
  if (o.grid_exponent.has_value() == !o.input.input.empty()) {
    throw UsageError("bench needs exactly one of --input or --grid-exponent");
  }
  bench::Config config;
  config.kernel = o.kernel == "triangles" ? bench::Kernel::triangles
                  : o.kernel == "ktruss"  ? bench::Kernel::ktruss
                                          : bench::Kernel::truss;
  config.algorithm = *parse_triangle_algorithm(o.algorithm);
  config.k = o.k;
  config.repetitions = o.reps;
  config.energy_joules = o.energy;
  config.processor = o.processor;

  Graph g;
  std::uint64_t edge_basis = 0;
  std::optional<std::uint64_t> published_grid_edges;
  std::optional<std::uint64_t> side;
  if (o.grid_exponent) {
    const GridSpec spec = GridSpec::from_exponent(*o.grid_exponent);
    side = spec.side();
    g = grid_graph(spec);
    edge_basis = g.num_edges();
    config.dataset = "grid-" + std::to_string(*o.grid_exponent);
    if (auto row = reference::find_grid(*o.grid_exponent)) published_grid_edges = row->edges;
  } else {
    const LoadedGraph loaded = o.input.load();
    g = loaded.graph;
    edge_basis = loaded.stored_entries;
    config.dataset = dataset_name(o.input.input);
  }
  if (!o.dataset.empty()) config.dataset = o.dataset;

  if (!o.expect.empty()) {
    config.expected = load_expected(config.kernel, o.expect, g.num_vertices());
  } else if (o.expect_oracle) {
    if (config.kernel != bench::Kernel::triangles) {
      throw UsageError("--expect-oracle applies to the triangles kernel only");
    }
    if (side) {
      // Closed form confirmed against the exhaustive oracle on small grids.
      config.expected = grid_triangle_count(*side);
    } else if (g.num_vertices() <= 5000) {
      config.expected = oracle_enumerate(g, false).count.count;
    } else {
      throw UsageError("graph too large for the exhaustive oracle (n > 5000)");
    }
  } else if (config.kernel == bench::Kernel::triangles) {
    if (auto row = reference::find_snap(config.dataset)) {
      config.expected = row->triangles;
      std::cerr << "expecting " << row->triangles << " triangles (published value for "
                << row->name << ")\n";
    }
  }

  bench::MetricsRecord rec = bench::run_benchmark(g, edge_basis, config);
  if (published_grid_edges && *published_grid_edges != g.num_edges()) {
    rec.status = bench::Status::failed;
    rec.verification_detail = "generated " + std::to_string(g.num_edges()) +
                              " edges, published table lists " +
                              std::to_string(*published_grid_edges);
  }
  Output out(o.out);
  bench::emit_report({rec}, *bench::parse_report_format(o.report), out.stream());
  if (!rec.verification_detail.empty()) {
    std::cerr << to_string(rec.status) << ": " << rec.verification_detail << '\n';
  }
  return bench::exit_code({rec});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse linear algebra triangle counting and k-truss benchmarks"};
  app.require_subcommand(1);

  unsigned gen_exponent = 0;
  std::optional<std::uint64_t> gen_side;
  std::string gen_out, gen_format = "tsv";
  auto* generate = app.add_subcommand("generate", "Write an M x M 8-neighbour image grid graph");
  auto* gen_exp_opt = generate->add_option("--grid-exponent", gen_exponent, "M = 2^n")
                          ->check(CLI::Range(1u, 15u));
  auto* gen_side_opt = generate->add_option("--grid-side", gen_side, "M directly (M >= 2)");
  gen_exp_opt->excludes(gen_side_opt);
  generate->add_option("--out,-o", gen_out, "Output file (default stdout)");
  generate->add_option("--format,-f", gen_format, "tsv or mmio")->check(CLI::IsMember({"tsv", "mmio"}));

  InputOptions conv_in;
  std::string conv_to, conv_out;
  auto* convert = app.add_subcommand("convert", "Normalize and re-encode a graph file");
  conv_in.attach(convert);
  convert->add_option("--from", conv_in.format, "Input format")->check(CLI::IsMember({"tsv", "mmio"}));
  convert->add_option("--to", conv_to, "Output format")->required()->check(CLI::IsMember({"tsv", "mmio"}));
  convert->add_option("--out,-o", conv_out, "Output file (default stdout)");

  InputOptions tri_in;
  std::string tri_algorithm = "hadamard", tri_expect;
  bool tri_enumerate = false;
  auto* triangles = app.add_subcommand("triangles", "Count triangles");
  tri_in.attach(triangles);
  triangles->add_option("--algorithm,-a", tri_algorithm, "hadamard, lu, incidence, oracle or all")
      ->check(CLI::IsMember({"hadamard", "lu", "incidence", "oracle", "all"}));
  triangles->add_flag("--enumerate", tri_enumerate, "Also list every triangle, 1-based");
  triangles->add_option("--expect", tri_expect, "Expected count, or a file holding it");

  InputOptions kt_in;
  int kt_k = 3;
  bool kt_decompose = false;
  std::string kt_out, kt_expect;
  auto* ktruss_cmd = app.add_subcommand("ktruss", "Compute a k-truss or the truss decomposition");
  kt_in.attach(ktruss_cmd);
  ktruss_cmd->add_option("--k", kt_k, "Truss order (k >= 2)")->check(CLI::Range(2, 1 << 30));
  ktruss_cmd->add_flag("--decompose", kt_decompose, "Report every edge's largest k");
  ktruss_cmd->add_option("--out,-o", kt_out, "Output file (default stdout)");
  ktruss_cmd->add_option("--expect", kt_expect, "Expected edge list or trussness table file");

  InputOptions tr_in;
  std::string tr_out, tr_expect;
  auto* truss_cmd = app.add_subcommand("truss", "Truss decomposition (same as ktruss --decompose)");
  tr_in.attach(truss_cmd);
  truss_cmd->add_option("--out,-o", tr_out, "Output file (default stdout)");
  truss_cmd->add_option("--expect", tr_expect, "Expected trussness table file");

  BenchOptions bo;
  auto* bench_cmd = app.add_subcommand("bench", "Time a kernel and report edges per second");
  bo.input.attach(bench_cmd, false);
  bench_cmd->add_option("--grid-exponent", bo.grid_exponent, "Benchmark a generated 2^n grid")
      ->check(CLI::Range(1u, 15u));
  bench_cmd->add_option("--kernel", bo.kernel, "triangles, ktruss or truss")
      ->check(CLI::IsMember({"triangles", "ktruss", "truss"}));
  bench_cmd->add_option("--algorithm,-a", bo.algorithm, "Triangle algorithm")
      ->check(CLI::IsMember({"hadamard", "lu", "incidence", "oracle"}));
  bench_cmd->add_option("--k", bo.k, "Truss order for the ktruss kernel")->check(CLI::Range(2, 1 << 30));
  bench_cmd->add_option("--reps", bo.reps, "Repetitions (default 100)")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--report", bo.report, "csv, json or table")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  bench_cmd->add_option("--expect", bo.expect, "Expected result: count or file");
  bench_cmd->add_flag("--expect-oracle", bo.expect_oracle, "Verify against the brute-force oracle");
  bench_cmd->add_option("--energy-joules", bo.energy, "Externally measured energy to record");
  bench_cmd->add_option("--processor", bo.processor, "Processor description to record");
  bench_cmd->add_option("--dataset", bo.dataset, "Dataset name for the report");
  bench_cmd->add_option("--out,-o", bo.out, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*generate) {
      if (!*gen_exp_opt && !*gen_side_opt) throw UsageError("pass --grid-exponent or --grid-side");
      return run_generate(gen_exponent, gen_side, gen_out, gen_format);
    }
    if (*convert) return run_convert(conv_in, conv_to, conv_out);
    if (*triangles) return run_triangles(tri_in, tri_algorithm, tri_enumerate, tri_expect);
    if (*ktruss_cmd) return run_ktruss(kt_in, kt_k, kt_decompose, kt_out, kt_expect);
    if (*truss_cmd) return run_ktruss(tr_in, 3, true, tr_out, tr_expect);
    if (*bench_cmd) return run_bench(bo);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
