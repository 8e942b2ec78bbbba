// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#include "gblite/algorithms.hpp"

#include <numeric>

namespace gblite::algo {

namespace {

void check_cc_preconditions(const Graph& g) {
  if (g.kind == Kind::UndirectedAdjacency) return;
  if (g.pattern_is_symmetric == TriState::Unknown)
    fail(ErrCode::MissingProperty,
         "connected_components needs the symmetric-pattern property on "
         "directed graphs");
  if (g.pattern_is_symmetric == TriState::False)
    fail(ErrCode::PreconditionViolated,
         "connected_components needs a symmetric pattern");
}

std::vector<Index> values_as_indices(const SparseVector& v) {
  std::vector<Index> out(v.nvals());
  for (std::size_t p = 0; p < v.nvals(); ++p) out[p] = as_uint64(v.values()[p]);
  return out;
}

}  // namespace

// FastSV. f is the dense parent vector, gf the grandparents, mngf the
// running minimum of neighbor grandparents. Hooking and shortcutting are all
// min-updates, so f is monotone non-increasing and converges to the
// component minima.
ComponentResult connected_components_fastsv(
    const Graph& g, std::vector<std::vector<std::uint64_t>>* trace) {
  check_cc_preconditions(g);
  Index n = g.n();
  ComponentResult out;
  if (n == 0) return out;

  auto min_u64 = ops::min(Domain::Uint64);
  auto min_second = ops::min_second(Domain::Uint64);

  SparseVector parent(n, Domain::Uint64);
  {
    std::vector<Index> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Scalar> vals;
    vals.reserve(n);
    for (Index i = 0; i < n; ++i) vals.emplace_back(static_cast<std::uint64_t>(i));
    parent.adopt(std::move(idx), std::move(vals));
  }
  SparseVector grand = parent.dup();
  SparseVector grand_prev = parent.dup();
  SparseVector min_neighbor_grand = parent.dup();
  std::vector<Index> parent_idx = values_as_indices(parent);

  auto record = [&]() {
    if (!trace) return;
    std::vector<std::uint64_t> snap(n);
    for (Index i = 0; i < n; ++i) snap[i] = as_uint64(parent.values()[i]);
    trace->push_back(std::move(snap));
  };

  for (;;) {
    ++out.iterations;

    // Stochastic hooking: pull the smallest grandparent seen from any
    // neighbor, then offer it to the current parents.
    Descriptor keep_min;
    keep_min.accumulate(min_u64);
    mxv(min_neighbor_grand, keep_min, min_second, g.A, grand);

    Descriptor hook;
    hook.accumulate(min_u64);
    assign(parent, hook, IndexSel(parent_idx), min_neighbor_grand);

    // Aggressive hooking and shortcutting.
    Descriptor fold;
    fold.accumulate(min_u64);
    assign(parent, fold, kAll, min_neighbor_grand);
    Descriptor shortcut;
    shortcut.accumulate(min_u64);
    assign(parent, shortcut, kAll, grand);

    // New grandparents.
    parent_idx = values_as_indices(parent);
    SparseVector next_grand(n, Domain::Uint64);
    extract(next_grand, Descriptor{}, parent, IndexSel(parent_idx));
    grand = std::move(next_grand);

    record();

    SparseVector changed(n, Domain::Bool);
    ewise_mult(changed, Descriptor{}, ops::ne(Domain::Uint64), grand_prev, grand);
    Scalar any_change = false;
    reduce_scalar(any_change, std::nullopt, ops::lor_monoid(), changed);
    grand_prev = grand.dup();
    if (!as_bool(any_change)) break;
  }

  out.label.resize(n);
  for (Index i = 0; i < n; ++i) out.label[i] = as_uint64(parent.values()[i]);
  return out;
}

namespace basic {

ComponentResult connected_components_fastsv(
    Graph& g, std::vector<std::vector<std::uint64_t>>* trace) {
  if (g.kind != Kind::UndirectedAdjacency &&
      g.pattern_is_symmetric == TriState::Unknown)
    property_symmetric_pattern(g);
  return algo::connected_components_fastsv(g, trace);
}

}  // namespace basic

}  // namespace gblite::algo
