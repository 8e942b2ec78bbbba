// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#include "gblite/algorithms.hpp"

namespace gblite::algo {

PageRankResult pagerank_gap(const Graph& g, double damping, double tol,
                            int itermax,
                            std::vector<std::vector<double>>* trace) {
  if (!g.AT) fail(ErrCode::MissingProperty, "pagerank_gap needs G.AT");
  if (!g.row_degree) fail(ErrCode::MissingProperty, "pagerank_gap needs G.row_degree");
  if (!(damping > 0.0))
    fail(ErrCode::NonPositiveDamping, "damping must be positive");

  Index n = g.n();
  PageRankResult out;
  out.rank.assign(n, 0.0);
  if (n == 0) return out;

  double teleport = (1.0 - damping) / static_cast<double>(n);
  auto plus_fp64 = ops::plus(Domain::Fp64);
  auto plus_second = ops::plus_second(Domain::Fp64);

  SparseVector rank(n, Domain::Fp64);
  assign(rank, Descriptor{}, kAll, Scalar(1.0 / static_cast<double>(n)));

  // d = rowdegree / damping; entries only for non-dangling nodes, which is
  // all the push step ever reads.
  SparseVector scaled_degree(n, Domain::Fp64);
  {
    UnaryOp prescale;
    prescale.eval = [damping](const Scalar& x, Index, Index) -> Scalar {
      return static_cast<double>(as_uint64(x)) / damping;
    };
    prescale.in = Domain::Uint64;
    prescale.out = Domain::Fp64;
    prescale.name = "degree_over_damping";
    apply(scaled_degree, Descriptor{}, prescale, *g.row_degree);
  }

  SparseVector prior(n, Domain::Fp64);
  auto record = [&](const SparseVector& r) {
    if (!trace) return;
    std::vector<double> snap(n, 0.0);
    for (std::size_t p = 0; p < r.nvals(); ++p)
      snap[r.indices()[p]] = as_fp64(r.values()[p]);
    trace->push_back(std::move(snap));
  };

  int k = 0;
  for (k = 1; k <= itermax; ++k) {
    std::swap(prior, rank);  // prior now holds the previous iterate

    SparseVector contrib(n, Domain::Fp64);
    ewise_mult(contrib, Descriptor{}, ops::div(Domain::Fp64), prior, scaled_degree);

    assign(rank, Descriptor{}, kAll, Scalar(teleport));
    Descriptor gather;
    gather.accumulate(plus_fp64);
    mxv(rank, gather, plus_second, *g.AT, contrib);
    record(rank);

    // 1-norm of the change: prior -= rank, then abs, then sum.
    Descriptor minus_rank;
    minus_rank.accumulate(ops::minus(Domain::Fp64));
    assign(prior, minus_rank, kAll, rank);
    SparseVector change(n, Domain::Fp64);
    apply(change, Descriptor{}, ops::abs(Domain::Fp64), prior);
    prior = std::move(change);

    Scalar norm = 0.0;
    reduce_scalar(norm, std::nullopt, ops::plus_monoid(Domain::Fp64), prior);
    if (as_fp64(norm) < tol) break;
  }
  out.iterations = std::min(k, itermax);

  for (std::size_t p = 0; p < rank.nvals(); ++p)
    out.rank[rank.indices()[p]] = as_fp64(rank.values()[p]);
  return out;
}

namespace basic {

PageRankResult pagerank_gap(Graph& g, double damping, double tol, int itermax,
                            std::vector<std::vector<double>>* trace) {
  if (!g.AT) property_at(g);
  if (!g.row_degree) property_rowdegree(g);
  return algo::pagerank_gap(g, damping, tol, itermax, trace);
}

}  // namespace basic

}  // namespace gblite::algo
