// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#include "gblite/algorithms.hpp"

#include <cmath>
#include <limits>

namespace gblite::algo {

// Delta-stepping. Tentative distances are kept dense with +inf for
// unreached nodes (absent entries behave the same way under min-plus, and a
// dense t keeps the bucket selects simple); the result drops the infinities.
// Per bucket, light edges are relaxed to a fixpoint, then heavy edges once
// from every node that passed through the bucket.
SsspResult sssp_delta_stepping(const Graph& g, Index source, double delta) {
  Index n = g.n();
  if (source >= n)
    fail(ErrCode::SourceOutOfRange, "source " + std::to_string(source));
  if (!(delta > 0.0)) fail(ErrCode::NonPositiveDelta, "delta must be positive");
  if (g.A.domain() != Domain::Fp64)
    fail(ErrCode::DomainMismatch, "sssp needs fp64 edge weights");
  for (const Scalar& w : g.A.values())
    if (!(as_fp64(w) > 0.0))
      fail(ErrCode::NonPositiveWeight, "edge weights must be positive");

  const double inf = std::numeric_limits<double>::infinity();
  auto min_plus = ops::min_plus(Domain::Fp64);
  auto min_fp64 = ops::min(Domain::Fp64);

  SparseMatrix light(n, n, Domain::Fp64);
  select(light, Descriptor{}, ops::value_le(Scalar(delta)), g.A);
  SparseMatrix heavy(n, n, Domain::Fp64);
  select(heavy, Descriptor{}, ops::value_gt(Scalar(delta)), g.A);

  SparseVector dist(n, Domain::Fp64);
  assign(dist, Descriptor{}, kAll, Scalar(inf));
  dist.set_element(source, 0.0);

  SparseVector bucket(n, Domain::Fp64);
  SparseVector reach(n, Domain::Fp64);  // nodes that passed through this bucket

  auto finite_ge = [&](double bound) {
    SelectOp pred;
    pred.pred = [bound, inf](const Scalar& x, Index, Index) {
      double v = as_fp64(x);
      return v >= bound && v < inf;
    };
    pred.in = Domain::Fp64;
    pred.name = "finite_ge";
    return pred;
  };

  double frontier_lo = 0.0;
  for (;;) {
    SparseVector unsettled(n, Domain::Fp64);
    select(unsettled, Descriptor{}, finite_ge(frontier_lo), dist);
    if (unsettled.nvals() == 0) break;

    // Jump to the first non-empty bucket at or past frontier_lo.
    Scalar nearest = std::numeric_limits<double>::infinity();
    reduce_scalar(nearest, std::nullopt, ops::min_monoid(Domain::Fp64), unsettled);
    double lo = std::floor(as_fp64(nearest) / delta) * delta;
    double hi = lo + delta;
    frontier_lo = hi;

    bucket.clear();
    select(bucket, Descriptor{}, ops::in_halfopen(Scalar(lo), Scalar(hi)), dist);
    reach.clear();

    while (bucket.nvals() > 0) {
      Descriptor in_bucket;
      in_bucket.mask_of(bucket).structural();
      assign(reach, in_bucket, kAll, Scalar(1.0));

      SparseVector relaxed(n, Domain::Fp64);
      vxm(relaxed, Descriptor{}, min_plus, bucket, light);

      // Strictly improving candidates that land back in this bucket.
      SparseVector improves(n, Domain::Bool);
      ewise_mult(improves, Descriptor{}, ops::lt(Domain::Fp64), relaxed, dist);

      SparseVector next_bucket(n, Domain::Fp64);
      Descriptor improving;
      improving.mask_of(improves).replace();
      select(next_bucket, improving, ops::in_halfopen(Scalar(lo), Scalar(hi)),
             relaxed);

      Descriptor fold;
      fold.accumulate(min_fp64);
      assign(dist, fold, kAll, relaxed);

      bucket = std::move(next_bucket);
    }

    // One heavy relaxation from everything settled in this bucket.
    SparseVector seeds(n, Domain::Fp64);
    ewise_mult(seeds, Descriptor{}, ops::times(Domain::Fp64), dist, reach);
    if (seeds.nvals() > 0) {
      SparseVector relaxed(n, Domain::Fp64);
      vxm(relaxed, Descriptor{}, min_plus, seeds, heavy);
      Descriptor fold;
      fold.accumulate(min_fp64);
      assign(dist, fold, kAll, relaxed);
    }
  }

  SsspResult out;
  out.dist = SparseVector(n, Domain::Fp64);
  select(out.dist, Descriptor{}, ops::value_lt(Scalar(inf)), dist);
  return out;
}

double sssp_default_delta(const Graph& g) {
  if (g.A.nvals() == 0 || g.A.domain() != Domain::Fp64) return 1.0;
  Scalar mx = -std::numeric_limits<double>::infinity();
  reduce_scalar(mx, std::nullopt, ops::max_monoid(Domain::Fp64), g.A);
  double m = as_fp64(mx);
  return m > 0 ? m / 2.0 : 1.0;
}

namespace basic {

SsspResult sssp_delta_stepping(Graph& g, Index source, std::optional<double> delta) {
  double d = delta ? *delta : sssp_default_delta(g);
  return algo::sssp_delta_stepping(g, source, d);
}

}  // namespace basic

}  // namespace gblite::algo
