// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gblite/graph.hpp"

namespace gblite::algo {

// The algorithms come in two tiers. The functions in this namespace are the
// advanced forms: they never touch the graph's caches and raise
// MissingProperty when a required cache is absent. The algo::basic
// counterparts compute whatever is missing, then delegate.

struct BfsResult {
  SparseVector parent;                 // Uint64; parent(source) = source
  std::optional<SparseVector> level;   // Uint64 hop counts when requested
};

// Push-only parents BFS over the any-secondi semiring.
BfsResult bfs_push(const Graph& g, Index source, bool want_level = false);

struct BfsConfig {
  enum class Direction { Auto, ForcePush, ForcePull };
  Direction direction = Direction::Auto;
  // Auto pushes while the frontier is small (< n/push_divisor) and growing.
  Index push_divisor = 16;
  bool want_level = false;
};

// Per level chooses a push (vxm on A) or a pull (mxv on the cached AT).
BfsResult bfs_direction_optimizing(const Graph& g, Index source,
                                   const BfsConfig& config = {});

struct CentralityResult {
  std::vector<double> centrality;  // dense, length n
};

// Batched Brandes betweenness centrality; one BFS wave per batch row.
CentralityResult betweenness_centrality(const Graph& g,
                                        std::span<const Index> sources);

struct PageRankResult {
  std::vector<double> rank;  // dense, length n
  int iterations = 0;
};

// GAP-style PageRank; dangling vertices lose rank mass, as in the benchmark.
// When trace is given, every iterate is appended to it.
PageRankResult pagerank_gap(const Graph& g, double damping = 0.85,
                            double tol = 1e-4, int itermax = 100,
                            std::vector<std::vector<double>>* trace = nullptr);

struct SsspResult {
  SparseVector dist;  // Fp64; finite distances only, unreached nodes absent
};

// Delta-stepping over the min-plus semiring; weights must be positive.
SsspResult sssp_delta_stepping(const Graph& g, Index source, double delta);

// Default bucket width when the caller gives none: half the largest weight.
double sssp_default_delta(const Graph& g);

struct TriangleCountConfig {
  enum class Presort { Auto, Force, Never };
  Presort presort = Presort::Auto;
  std::uint64_t sample_seed = 7;
};

// Masked L*U' count of unique 3-cliques. Auto presorts by ascending degree
// when the sampled mean degree exceeds 4x the median.
std::uint64_t triangle_count(const Graph& g, const TriangleCountConfig& config = {});

struct ComponentResult {
  std::vector<std::uint64_t> label;  // dense; label = minimum node id in component
  int iterations = 0;
};

// FastSV: stochastic hooking, aggressive hooking, shortcutting on a parent
// vector until the grandparent vector stabilizes. When trace is given, the
// parent vector after each iteration is appended.
ComponentResult connected_components_fastsv(
    const Graph& g, std::vector<std::vector<std::uint64_t>>* trace = nullptr);

namespace basic {

BfsResult bfs_push(Graph& g, Index source, bool want_level = false);
BfsResult bfs_direction_optimizing(Graph& g, Index source,
                                   const BfsConfig& config = {});
CentralityResult betweenness_centrality(Graph& g, std::span<const Index> sources);
PageRankResult pagerank_gap(Graph& g, double damping = 0.85, double tol = 1e-4,
                            int itermax = 100,
                            std::vector<std::vector<double>>* trace = nullptr);
SsspResult sssp_delta_stepping(Graph& g, Index source,
                               std::optional<double> delta = std::nullopt);
std::uint64_t triangle_count(Graph& g, const TriangleCountConfig& config = {});
ComponentResult connected_components_fastsv(
    Graph& g, std::vector<std::vector<std::uint64_t>>* trace = nullptr);

}  // namespace basic

}  // namespace gblite::algo
