// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#include "gblite/algorithms.hpp"
#include "gblite/util.hpp"

namespace gblite::algo {

namespace {

// Symmetry and an empty diagonal are hard requirements; unknown caches are
// the advanced-mode MissingProperty case.
void check_tc_preconditions(const Graph& g) {
  if (g.kind != Kind::UndirectedAdjacency) {
    if (g.pattern_is_symmetric == TriState::Unknown)
      fail(ErrCode::MissingProperty,
           "triangle_count needs the symmetric-pattern property on directed graphs");
    if (g.pattern_is_symmetric == TriState::False)
      fail(ErrCode::PreconditionViolated,
           "triangle_count needs a symmetric pattern");
  }
  if (g.ndiag == -1)
    fail(ErrCode::MissingProperty, "triangle_count needs the ndiag property");
  if (g.ndiag != 0)
    fail(ErrCode::PreconditionViolated, "triangle_count needs a loop-free graph");
}

}  // namespace

std::uint64_t triangle_count(const Graph& g, const TriangleCountConfig& config) {
  check_tc_preconditions(g);
  Index n = g.n();

  bool sort_first = config.presort == TriangleCountConfig::Presort::Force;
  if (config.presort == TriangleCountConfig::Presort::Auto) {
    auto sample = util::sample_degree(
        g, std::min<Index>(n, util::kDefaultSampleSize), config.sample_seed);
    sort_first = sample.mean > 4.0 * sample.median;
  }

  SparseMatrix permuted;
  const SparseMatrix* adj = &g.A;
  if (sort_first) {
    auto perm = util::sort_by_degree(g, true, true);
    permuted = SparseMatrix(n, n, g.A.domain());
    extract(permuted, Descriptor{}, g.A, perm, perm);
    adj = &permuted;
  }

  SparseMatrix lower(n, n, adj->domain());
  select(lower, Descriptor{}, ops::tril(), *adj);
  SparseMatrix upper(n, n, adj->domain());
  select(upper, Descriptor{}, ops::triu(), *adj);

  // C<str(L)> = L plus.pair U'
  SparseMatrix closed(n, n, Domain::Uint64);
  Descriptor wedge;
  wedge.mask_of(lower).structural().transpose_b();
  mxm(closed, wedge, ops::plus_pair(Domain::Uint64), lower, upper);

  Scalar total = std::uint64_t{0};
  reduce_scalar(total, std::nullopt, ops::plus_monoid(Domain::Uint64), closed);
  return as_uint64(total);
}

namespace basic {

std::uint64_t triangle_count(Graph& g, const TriangleCountConfig& config) {
  if (g.kind != Kind::UndirectedAdjacency &&
      g.pattern_is_symmetric == TriState::Unknown)
    property_symmetric_pattern(g);
  if (g.ndiag == -1) property_ndiag(g);
  if (!g.row_degree) property_rowdegree(g);
  return algo::triangle_count(g, config);
}

}  // namespace basic

}  // namespace gblite::algo
