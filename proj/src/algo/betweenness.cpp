// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#include "gblite/algorithms.hpp"

namespace gblite::algo {

// Batched Brandes. P(b,j) counts shortest paths from sources[b] to j, the
// per-level frontiers live in S, and B accumulates 1 + dependency. The
// centrality is the column sum of B minus the batch size.
CentralityResult betweenness_centrality(const Graph& g,
                                        std::span<const Index> sources) {
  if (!g.AT) fail(ErrCode::MissingProperty, "betweenness_centrality needs G.AT");
  if (sources.empty()) fail(ErrCode::EmptyBatch, "empty source batch");
  Index n = g.n();
  for (Index s : sources)
    if (s >= n)
      fail(ErrCode::SourceOutOfRange, "source " + std::to_string(s));

  Index ns = sources.size();
  auto plus_first = ops::plus_first(Domain::Fp64);
  auto plus_fp64 = ops::plus(Domain::Fp64);

  SparseMatrix paths(ns, n, Domain::Fp64);
  for (Index b = 0; b < ns; ++b) paths.set_element(b, sources[b], 1.0);

  SparseMatrix frontier(ns, n, Domain::Fp64);
  {
    Descriptor first_step;
    first_step.mask_of(paths).structural().complemented();
    mxm(frontier, first_step, plus_first, paths, g.A);
  }

  // Forward sweep: record each frontier's pattern, fold path counts into P.
  std::vector<SparseMatrix> levels;
  while (frontier.nvals() > 0 && levels.size() < n) {
    SparseMatrix pat(ns, n, Domain::Bool);
    Descriptor onto_frontier;
    onto_frontier.mask_of(frontier).structural();
    assign(pat, onto_frontier, kAll, kAll, Scalar(true));
    levels.push_back(std::move(pat));

    Descriptor fold;
    fold.accumulate(plus_fp64);
    assign(paths, fold, kAll, kAll, frontier);

    SparseMatrix next(ns, n, Domain::Fp64);
    Descriptor unvisited;
    unvisited.mask_of(paths).structural().complemented().replace();
    mxm(next, unvisited, plus_first, frontier, g.A);
    frontier = std::move(next);
  }

  SparseMatrix bc_update(ns, n, Domain::Fp64);
  assign(bc_update, Descriptor{}, kAll, kAll, Scalar(1.0));

  // Backward sweep through the recorded levels.
  for (std::size_t i = levels.size(); i-- > 1;) {
    SparseMatrix contrib(ns, n, Domain::Fp64);
    Descriptor at_level;
    at_level.mask_of(levels[i]).structural().replace();
    ewise_mult(contrib, at_level, ops::div(Domain::Fp64), bc_update, paths);

    SparseMatrix pulled(ns, n, Domain::Fp64);
    Descriptor to_parents;
    to_parents.mask_of(levels[i - 1]).structural().replace();
    mxm(pulled, to_parents, plus_first, contrib, *g.AT);

    Descriptor fold;
    fold.accumulate(plus_fp64);
    ewise_mult(bc_update, fold, ops::times(Domain::Fp64), pulled, paths);
  }

  // centrality(j) = sum_b (B(b,j) - 1)
  SparseVector centrality(n, Domain::Fp64);
  assign(centrality, Descriptor{}, kAll, Scalar(-static_cast<double>(ns)));
  Descriptor col_sums;
  col_sums.accumulate(plus_fp64).transpose_a();
  reduce_rows(centrality, col_sums, ops::plus_monoid(Domain::Fp64), bc_update);

  CentralityResult out;
  out.centrality.assign(n, 0.0);
  for (std::size_t p = 0; p < centrality.nvals(); ++p)
    out.centrality[centrality.indices()[p]] = as_fp64(centrality.values()[p]);
  return out;
}

namespace basic {

CentralityResult betweenness_centrality(Graph& g, std::span<const Index> sources) {
  if (!g.AT) property_at(g);
  return algo::betweenness_centrality(g, sources);
}

}  // namespace basic

}  // namespace gblite::algo
