// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#include "gblite/util.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "gblite/graph.hpp"

namespace gblite::util {

namespace {

std::vector<std::uint64_t> dense_degrees(const SparseVector& d, Index n) {
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t p = 0; p < d.nvals(); ++p)
    out[d.indices()[p]] = as_uint64(d.values()[p]);
  return out;
}

const SparseVector& degree_property(const Graph& g, bool by_row) {
  const auto& prop = by_row ? g.row_degree : g.col_degree;
  if (!prop)
    fail(ErrCode::MissingProperty,
         by_row ? "row_degree property not computed"
                : "col_degree property not computed");
  return *prop;
}

}  // namespace

std::vector<Index> sort_by_degree(const Graph& g, bool ascending, bool by_row) {
  Index n = g.n();
  auto deg = dense_degrees(degree_property(g, by_row), n);
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](Index a, Index b) {
    return ascending ? deg[a] < deg[b] : deg[a] > deg[b];
  });
  return perm;
}

DegreeSample sample_degree(const Graph& g, Index sample_size, std::uint64_t seed) {
  Index n = g.n();
  auto deg = dense_degrees(degree_property(g, true), n);
  std::vector<std::uint64_t> sample;
  if (n == 0) return {0.0, 0.0, 0};
  if (sample_size >= n) {
    sample = deg;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    sample.reserve(sample_size);
    for (Index k = 0; k < sample_size; ++k) sample.push_back(deg[pick(rng)]);
  }
  std::sort(sample.begin(), sample.end());
  double total = 0;
  for (auto v : sample) total += static_cast<double>(v);
  DegreeSample out;
  out.sample_size = sample.size();
  out.mean = total / static_cast<double>(sample.size());
  out.median = static_cast<double>(sample[(sample.size() - 1) / 2]);
  return out;
}

SparseMatrix pattern(const SparseMatrix& A) {
  SparseMatrix P(A.nrows(), A.ncols(), Domain::Bool);
  std::vector<Index> row_ptr = A.row_ptr();
  std::vector<Index> col_idx = A.col_idx();
  std::vector<Scalar> vals(A.nvals(), true);
  P.adopt(std::move(row_ptr), std::move(col_idx), std::move(vals));
  return P;
}

bool is_all(const SparseMatrix& A, const SparseMatrix& B, const BinaryOp& cmp) {
  if (A.nrows() != B.nrows() || A.ncols() != B.ncols()) return false;
  if (A.row_ptr() != B.row_ptr() || A.col_idx() != B.col_idx()) return false;
  for (Index p = 0; p < A.nvals(); ++p)
    if (!as_bool(cmp(A.values()[p], B.values()[p]))) return false;
  return true;
}

bool is_all(const SparseVector& a, const SparseVector& b, const BinaryOp& cmp) {
  if (a.size() != b.size()) return false;
  if (a.indices() != b.indices()) return false;
  for (std::size_t p = 0; p < a.nvals(); ++p)
    if (!as_bool(cmp(a.values()[p], b.values()[p]))) return false;
  return true;
}

bool is_equal(const SparseMatrix& A, const SparseMatrix& B) {
  if (A.domain() != B.domain()) return false;
  return is_all(A, B, ops::eq(A.domain()));
}

bool is_equal(const SparseVector& a, const SparseVector& b) {
  if (a.domain() != b.domain()) return false;
  return is_all(a, b, ops::eq(a.domain()));
}

void sort_arrays(std::vector<std::int64_t>& k1, std::vector<std::int64_t>* k2,
                 std::vector<std::int64_t>* k3) {
  if (k2 && k2->size() != k1.size())
    fail(ErrCode::LengthMismatch, "sort_arrays: k2 length differs from k1");
  if (k3 && k3->size() != k1.size())
    fail(ErrCode::LengthMismatch, "sort_arrays: k3 length differs from k1");
  std::vector<std::size_t> order(k1.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (k1[a] != k1[b]) return k1[a] < k1[b];
    if (k2 && (*k2)[a] != (*k2)[b]) return (*k2)[a] < (*k2)[b];
    if (k3 && (*k3)[a] != (*k3)[b]) return (*k3)[a] < (*k3)[b];
    return false;
  });
  auto permute = [&](std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> out(v.size());
    for (std::size_t i = 0; i < order.size(); ++i) out[i] = v[order[i]];
    v = std::move(out);
  };
  permute(k1);
  if (k2) permute(*k2);
  if (k3) permute(*k3);
}

double timer() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace gblite::util
