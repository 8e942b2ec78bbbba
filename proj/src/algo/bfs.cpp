// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#include "gblite/algorithms.hpp"

namespace gblite::algo {

namespace {

void check_source(const Graph& g, Index source) {
  if (source >= g.n())
    fail(ErrCode::SourceOutOfRange,
         "source " + std::to_string(source) + " with n = " + std::to_string(g.n()));
}

// Shared level body: the two variants differ only in how the next frontier
// is produced.
template <typename Step>
BfsResult run_bfs(const Graph& g, Index source, bool want_level, Step step) {
  check_source(g, source);
  Index n = g.n();
  auto semiring = ops::any_secondi();

  SparseVector parent(n, Domain::Uint64);
  parent.set_element(source, static_cast<std::uint64_t>(source));
  SparseVector frontier(n, Domain::Uint64);
  frontier.set_element(source, static_cast<std::uint64_t>(source));
  SparseVector level(n, Domain::Uint64);
  if (want_level) level.set_element(source, std::uint64_t{0});

  Index prev_nvals = 0;
  for (Index lvl = 1; lvl + 1 <= n; ++lvl) {
    SparseVector next(n, Domain::Uint64);
    Descriptor unvisited;
    unvisited.mask_of(parent).structural().complemented().replace();
    step(next, unvisited, semiring, frontier, prev_nvals);
    prev_nvals = frontier.nvals();
    frontier = std::move(next);
    if (frontier.nvals() == 0) break;

    Descriptor onto_frontier;
    onto_frontier.mask_of(frontier).structural();
    assign(parent, onto_frontier, kAll, frontier);
    if (want_level)
      assign(level, onto_frontier, kAll, Scalar(static_cast<std::uint64_t>(lvl)));
  }

  BfsResult out;
  out.parent = std::move(parent);
  if (want_level) out.level = std::move(level);
  return out;
}

}  // namespace

BfsResult bfs_push(const Graph& g, Index source, bool want_level) {
  return run_bfs(g, source, want_level,
                 [&](SparseVector& next, const Descriptor& desc,
                     const Semiring& semiring, const SparseVector& q, Index) {
                   vxm(next, desc, semiring, q, g.A);
                 });
}

BfsResult bfs_direction_optimizing(const Graph& g, Index source,
                                   const BfsConfig& config) {
  if (!g.AT) fail(ErrCode::MissingProperty, "bfs_direction_optimizing needs G.AT");
  Index divisor = config.push_divisor == 0 ? 1 : config.push_divisor;
  return run_bfs(g, source, config.want_level,
                 [&](SparseVector& next, const Descriptor& desc,
                     const Semiring& semiring, const SparseVector& q,
                     Index prev_nvals) {
                   bool push;
                   switch (config.direction) {
                     case BfsConfig::Direction::ForcePush: push = true; break;
                     case BfsConfig::Direction::ForcePull: push = false; break;
                     default:
                       push = q.nvals() < g.n() / divisor + 1 &&
                              q.nvals() > prev_nvals;
                   }
                   if (push)
                     vxm(next, desc, semiring, q, g.A);
                   else
                     mxv(next, desc, semiring, *g.AT, q);
                 });
}

namespace basic {

BfsResult bfs_push(Graph& g, Index source, bool want_level) {
  return algo::bfs_push(g, source, want_level);
}

BfsResult bfs_direction_optimizing(Graph& g, Index source, const BfsConfig& config) {
  if (!g.AT) property_at(g);
  return algo::bfs_direction_optimizing(g, source, config);
}

}  // namespace basic

}  // namespace gblite::algo
