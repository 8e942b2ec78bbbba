// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0
//
// Batch benchmark runner: loads a graph, executes one algorithm for T trials
// GAP-style, prints timings plus a result digest per trial, and optionally
// verifies each result against a reference checker.
//
// Exit codes: 0 success; 1 load failure; 2 configuration or precondition
// failure; 3 verification failure.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gblite/gblite.hpp"
#include "gblite/verify.hpp"

using namespace gblite;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLoadFailure = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitVerifyFailure = 3;

struct RunConfig {
  std::string algorithm;
  std::string input_path;
  std::string input_format;  // mm | bin | "" = by extension
  bool directed = true;
  int trials = 3;
  std::string sources = "seed:42";  // index list, single index, or seed:<n>
  double delta = 0.0;               // 0 = auto
  double damping = 0.85;
  double tol = 1e-4;
  int itermax = 100;
  bool verify = false;
  int threads = 1;
  std::string output_path;
};

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fp_digits(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string basename_of(const std::string& path) {
  auto pos = path.find_last_of('/');
  return pos == std::string::npos ? path : path.substr(pos + 1);
}

std::string guess_format(const RunConfig& cfg) {
  if (!cfg.input_format.empty()) return cfg.input_format;
  auto dot = cfg.input_path.find_last_of('.');
  std::string ext = dot == std::string::npos ? "" : cfg.input_path.substr(dot + 1);
  if (ext == "bin" || ext == "grb") return "bin";
  return "mm";
}

// Per-trial source schedule: an explicit list cycles (bfs/sssp) or serves as
// the whole batch (bc); a seed draws fresh ones per trial.
struct SourcePlan {
  std::vector<Index> list;
  std::optional<std::uint64_t> seed;

  static SourcePlan parse(const std::string& text) {
    SourcePlan plan;
    if (text.rfind("seed:", 0) == 0) {
      plan.seed = std::stoull(text.substr(5));
      return plan;
    }
    std::stringstream s(text);
    std::string tok;
    while (std::getline(s, tok, ',')) {
      if (!tok.empty()) plan.list.push_back(std::stoull(tok));
    }
    if (plan.list.empty()) plan.seed = 42;
    return plan;
  }

  Index single(int trial, Index n, std::mt19937_64& rng) const {
    if (seed) return std::uniform_int_distribution<Index>(0, n - 1)(rng);
    return list[trial % list.size()];
  }

  std::vector<Index> batch(Index n, std::mt19937_64& rng) const {
    if (!seed) return list;
    std::vector<Index> out(std::min<Index>(4, n));
    for (auto& s : out) s = std::uniform_int_distribution<Index>(0, n - 1)(rng);
    return out;
  }
};

struct TrialRecord {
  int trial;
  double seconds;
  std::uint64_t digest;
  std::string detail;
};

void warn_ignored(const CLI::App& app, const std::string& flag,
                  const std::string& algorithm) {
  if (app.count(flag) > 0)
    std::cerr << "warning: " << flag << " is ignored for --algorithm "
              << algorithm << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{
      "gapbench: run one graph algorithm for a number of timed trials, with "
      "optional verification against reference checkers"};
  app.add_option("--algorithm", cfg.algorithm, "bfs | bc | pr | sssp | tc | cc")
      ->required();
  app.add_option("--input", cfg.input_path, "path to the graph file")->required();
  app.add_option("--format", cfg.input_format, "mm | bin (default: by extension)");
  auto* directed_flag = app.add_flag("--directed", "treat the input as directed");
  auto* undirected_flag =
      app.add_flag("--undirected", "treat the input as undirected");
  app.add_option("--trials", cfg.trials, "number of timed trials (default 3)");
  app.add_option("--sources", cfg.sources,
                 "source list '0,4,9', single index, or seed:<n> (default seed:42)");
  app.add_option("--source", cfg.sources, "single source index");
  app.add_option("--delta", cfg.delta, "sssp bucket width (default: max weight / 2)");
  app.add_option("--damping", cfg.damping, "pagerank damping (default 0.85)");
  app.add_option("--tol", cfg.tol, "pagerank stopping tolerance (default 1e-4)");
  app.add_option("--itermax", cfg.itermax, "pagerank iteration cap (default 100)");
  app.add_flag("--verify", cfg.verify, "check each trial against a reference");
  app.add_option("--threads", cfg.threads, "worker threads (this build runs one)");
  app.add_option("--output", cfg.output_path, "write one JSON record per trial");
  CLI11_PARSE(app, argc, argv);

  const std::string& alg = cfg.algorithm;
  if (alg != "bfs" && alg != "bc" && alg != "pr" && alg != "sssp" && alg != "tc" &&
      alg != "cc") {
    std::cerr << "error: unknown algorithm '" << alg << "'\n";
    return kExitPrecondition;
  }
  if (directed_flag->count() && undirected_flag->count()) {
    std::cerr << "error: --directed and --undirected conflict\n";
    return kExitPrecondition;
  }
  cfg.directed = undirected_flag->count() == 0;
  if (cfg.threads > 1)
    std::cerr << "warning: --threads > 1 requested; this build runs "
                 "single-threaded\n";
  if (alg != "sssp") warn_ignored(app, "--delta", alg);
  if (alg != "pr") {
    warn_ignored(app, "--damping", alg);
    warn_ignored(app, "--tol", alg);
    warn_ignored(app, "--itermax", alg);
  }
  if (alg == "pr" || alg == "tc" || alg == "cc") {
    warn_ignored(app, "--sources", alg);
    warn_ignored(app, "--source", alg);
  }

  // ---- load -----------------------------------------------------------
  double t_load = util::timer();
  SparseMatrix matrix;
  try {
    matrix = io::read_matrix_file(cfg.input_path, guess_format(cfg));
  } catch (const std::exception& e) {
    std::cerr << "error: cannot load " << cfg.input_path << ": " << e.what()
              << "\n";
    return kExitLoadFailure;
  }
  if (alg == "sssp" && matrix.domain() != Domain::Fp64) {
    // Delta-stepping works on fp64 weights; cast integer inputs up front.
    SparseMatrix cast_m(matrix.nrows(), matrix.ncols(), Domain::Fp64);
    apply(cast_m, Descriptor{}, ops::cast(matrix.domain(), Domain::Fp64), matrix);
    matrix = std::move(cast_m);
  }
  t_load = util::timer() - t_load;

  Graph graph;
  double t_setup = util::timer();
  try {
    graph = graph_new(std::move(matrix),
                      cfg.directed ? Kind::DirectedAdjacency
                                   : Kind::UndirectedAdjacency);
    auto status = check_graph(graph);
    if (!status.ok()) {
      std::cerr << "error: invalid graph: " << status.message << "\n";
      return kExitPrecondition;
    }
    // Properties each advanced algorithm requires, timed as setup.
    if (alg == "bfs" || alg == "bc" || alg == "pr") property_at(graph);
    if (alg == "pr" || alg == "tc") property_rowdegree(graph);
    if ((alg == "tc" || alg == "cc") && graph.kind != Kind::UndirectedAdjacency)
      property_symmetric_pattern(graph);
    if (alg == "tc") property_ndiag(graph);
  } catch (const Error& e) {
    std::cerr << "error: setup failed: " << e.what() << "\n";
    return kExitPrecondition;
  }
  t_setup = util::timer() - t_setup;

  Index n = graph.n();
  if (n == 0) {
    std::cerr << "error: empty graph\n";
    return kExitPrecondition;
  }
  std::cout << "gapbench: algorithm=" << alg
            << " input=" << basename_of(cfg.input_path) << " n=" << n
            << " nvals=" << graph.A.nvals() << " " << kind_name(graph.kind)
            << "\n";
  std::cout << "setup: load " << fp_digits(t_load) << "s, properties "
            << fp_digits(t_setup) << "s\n";

  SourcePlan plan = SourcePlan::parse(cfg.sources);
  std::mt19937_64 source_rng(plan.seed.value_or(0));
  for (Index s : plan.list)
    if (s >= n) {
      std::cerr << "error: source " << s << " out of range\n";
      return kExitPrecondition;
    }

  std::vector<TrialRecord> records;
  bool verified_ok = true;
  std::string verify_detail;

  for (int trial = 0; trial < cfg.trials; ++trial) {
    TrialRecord rec{trial, 0.0, 0, ""};
    std::string canon;
    try {
      double t0 = util::timer();
      if (alg == "bfs") {
        Index src = plan.single(trial, n, source_rng);
        algo::BfsConfig bcfg;
        bcfg.want_level = cfg.verify;
        auto r = algo::bfs_direction_optimizing(graph, src, bcfg);
        rec.seconds = util::timer() - t0;
        rec.detail = "source=" + std::to_string(src);
        std::ostringstream c;
        for (std::size_t p = 0; p < r.parent.nvals(); ++p)
          c << r.parent.indices()[p] << ' ' << as_uint64(r.parent.values()[p])
            << '\n';
        canon = c.str();
        if (cfg.verify && verified_ok) {
          std::string why;
          if (!verify::check_bfs_parents(graph.A, src, r.parent, &why)) {
            verified_ok = false;
            verify_detail = "bfs trial " + std::to_string(trial) + ": " + why;
          } else {
            auto want = verify::bfs_levels(graph.A, src);
            for (Index v = 0; v < n && verified_ok; ++v) {
              auto e = r.level->extract_element(v);
              std::int64_t got = e ? static_cast<std::int64_t>(as_uint64(*e)) : -1;
              if (got != want[v]) {
                verified_ok = false;
                verify_detail = "bfs level mismatch at node " + std::to_string(v);
              }
            }
          }
        }
      } else if (alg == "bc") {
        auto batch = plan.batch(n, source_rng);
        auto r = algo::betweenness_centrality(graph, batch);
        rec.seconds = util::timer() - t0;
        rec.detail = "batch=" + std::to_string(batch.size());
        std::ostringstream c;
        for (Index v = 0; v < n; ++v)
          c << v << ' ' << fp_digits(r.centrality[v]) << '\n';
        canon = c.str();
        if (cfg.verify && verified_ok) {
          auto want = verify::brandes(graph.A, batch);
          for (Index v = 0; v < n && verified_ok; ++v)
            if (std::fabs(r.centrality[v] - want[v]) > 1e-9) {
              verified_ok = false;
              verify_detail = "bc mismatch at node " + std::to_string(v);
            }
        }
      } else if (alg == "pr") {
        auto r = algo::pagerank_gap(graph, cfg.damping, cfg.tol, cfg.itermax);
        rec.seconds = util::timer() - t0;
        rec.detail = "iterations=" + std::to_string(r.iterations);
        std::ostringstream c;
        for (Index v = 0; v < n; ++v) c << v << ' ' << fp_digits(r.rank[v]) << '\n';
        canon = c.str();
        if (cfg.verify && verified_ok) {
          auto iterates =
              verify::pagerank_iterates(graph.A, cfg.damping, r.iterations);
          const auto& want = iterates.back();
          for (Index v = 0; v < n && verified_ok; ++v)
            if (std::fabs(r.rank[v] - want[v]) > 1e-8) {
              verified_ok = false;
              verify_detail = "pr mismatch at node " + std::to_string(v);
            }
        }
      } else if (alg == "sssp") {
        Index src = plan.single(trial, n, source_rng);
        double delta = cfg.delta > 0 ? cfg.delta : algo::sssp_default_delta(graph);
        auto r = algo::sssp_delta_stepping(graph, src, delta);
        rec.seconds = util::timer() - t0;
        rec.detail = "source=" + std::to_string(src) + " delta=" + fp_digits(delta);
        std::ostringstream c;
        for (std::size_t p = 0; p < r.dist.nvals(); ++p)
          c << r.dist.indices()[p] << ' '
            << fp_digits(as_fp64(r.dist.values()[p])) << '\n';
        canon = c.str();
        if (cfg.verify && verified_ok) {
          auto want = verify::dijkstra(graph.A, src);
          const double inf = std::numeric_limits<double>::infinity();
          for (Index v = 0; v < n && verified_ok; ++v) {
            auto e = r.dist.extract_element(v);
            double got = e ? as_fp64(*e) : inf;
            if (got != want[v]) {
              verified_ok = false;
              verify_detail = "sssp mismatch at node " + std::to_string(v);
            }
          }
        }
      } else if (alg == "tc") {
        auto count = algo::triangle_count(graph);
        rec.seconds = util::timer() - t0;
        rec.detail = "triangles=" + std::to_string(count);
        canon = std::to_string(count) + "\n";
        if (cfg.verify && verified_ok && n <= 2000) {
          if (count != verify::count_triangles(graph.A)) {
            verified_ok = false;
            verify_detail = "tc count mismatch";
          }
        }
      } else {  // cc
        auto r = algo::connected_components_fastsv(graph);
        rec.seconds = util::timer() - t0;
        rec.detail = "iterations=" + std::to_string(r.iterations);
        std::ostringstream c;
        for (Index v = 0; v < n; ++v) c << v << ' ' << r.label[v] << '\n';
        canon = c.str();
        if (cfg.verify && verified_ok) {
          if (r.label != verify::components(graph.A)) {
            verified_ok = false;
            verify_detail = "cc labels differ from union-find";
          }
        }
      }
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitPrecondition;
    }
    rec.digest = fnv1a(canon);
    records.push_back(rec);
    std::printf("trial %d: %s %.6fs digest=%016" PRIx64 "\n", trial,
                rec.detail.c_str(), rec.seconds, rec.digest);
  }

  double best = records.empty() ? 0.0 : records[0].seconds;
  double total = 0.0;
  for (const auto& r : records) {
    best = std::min(best, r.seconds);
    total += r.seconds;
  }
  std::printf("summary: trials=%zu min=%.6fs mean=%.6fs\n", records.size(), best,
              records.empty() ? 0.0 : total / records.size());

  if (cfg.verify)
    std::cout << "verify: "
              << (verified_ok ? "PASS" : "FAIL (" + verify_detail + ")") << "\n";

  if (!cfg.output_path.empty()) {
    std::ofstream out(cfg.output_path);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.output_path << "\n";
      return kExitPrecondition;
    }
    for (const auto& r : records) {
      char digest_hex[32];
      std::snprintf(digest_hex, sizeof digest_hex, "%016" PRIx64, r.digest);
      out << "{\"algorithm\":\"" << alg << "\",\"graph\":\""
          << basename_of(cfg.input_path) << "\",\"n\":" << n
          << ",\"nvals\":" << graph.A.nvals() << ",\"trial\":" << r.trial
          << ",\"seconds\":" << fp_digits(r.seconds) << ",\"result_digest\":\""
          << digest_hex << "\"}\n";
    }
  }

  return verified_ok ? kExitOk : kExitVerifyFailure;
}
