// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#include "gblite/containers.hpp"

#include <algorithm>
#include <numeric>

namespace gblite {

namespace {

void check_domain(Domain have, Domain want) {
  if (have != want)
    fail(ErrCode::DomainMismatch,
         std::string("value is ") + domain_name(have) + ", container is " +
             domain_name(want));
}

}  // namespace

// ---- SparseVector -----------------------------------------------------------

void SparseVector::set_element(Index i, const Scalar& value) {
  if (i >= n_) fail(ErrCode::IndexOutOfBounds, "set_element index " + std::to_string(i));
  check_domain(domain_of(value), domain_);
  auto it = std::lower_bound(idx_.begin(), idx_.end(), i);
  auto pos = it - idx_.begin();
  if (it != idx_.end() && *it == i) {
    vals_[pos] = value;
  } else {
    idx_.insert(it, i);
    vals_.insert(vals_.begin() + pos, value);
  }
}

std::optional<Scalar> SparseVector::extract_element(Index i) const {
  if (i >= n_) fail(ErrCode::IndexOutOfBounds, "extract_element index " + std::to_string(i));
  auto it = std::lower_bound(idx_.begin(), idx_.end(), i);
  if (it == idx_.end() || *it != i) return std::nullopt;
  return vals_[it - idx_.begin()];
}

void SparseVector::extract_tuples(std::vector<Index>& idx,
                                  std::vector<Scalar>& vals) const {
  idx = idx_;
  vals = vals_;
}

void SparseVector::validate() const {
  if (idx_.size() != vals_.size())
    fail(ErrCode::InvalidMatrix, "vector index/value length mismatch");
  for (std::size_t k = 0; k < idx_.size(); ++k) {
    if (idx_[k] >= n_) fail(ErrCode::InvalidMatrix, "vector index out of range");
    if (k > 0 && idx_[k - 1] >= idx_[k])
      fail(ErrCode::InvalidMatrix, "vector indices not strictly increasing");
    if (domain_of(vals_[k]) != domain_)
      fail(ErrCode::InvalidMatrix, "vector value domain mismatch");
  }
}

// ---- SparseMatrix ------------------------------------------------------------

void SparseMatrix::set_element(Index i, Index j, const Scalar& value) {
  if (i >= nrows_ || j >= ncols_)
    fail(ErrCode::IndexOutOfBounds,
         "set_element at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  check_domain(domain_of(value), domain_);
  auto begin = col_idx_.begin() + row_ptr_[i];
  auto end = col_idx_.begin() + row_ptr_[i + 1];
  auto it = std::lower_bound(begin, end, j);
  auto pos = it - col_idx_.begin();
  if (it != end && *it == j) {
    vals_[pos] = value;
    return;
  }
  col_idx_.insert(it, j);
  vals_.insert(vals_.begin() + pos, value);
  for (Index r = i + 1; r <= nrows_; ++r) ++row_ptr_[r];
}

std::optional<Scalar> SparseMatrix::extract_element(Index i, Index j) const {
  if (i >= nrows_ || j >= ncols_)
    fail(ErrCode::IndexOutOfBounds,
         "extract_element at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  auto begin = col_idx_.begin() + row_ptr_[i];
  auto end = col_idx_.begin() + row_ptr_[i + 1];
  auto it = std::lower_bound(begin, end, j);
  if (it == end || *it != j) return std::nullopt;
  return vals_[it - col_idx_.begin()];
}

void SparseMatrix::extract_tuples(std::vector<Index>& rows, std::vector<Index>& cols,
                                  std::vector<Scalar>& vals) const {
  rows.clear();
  cols.clear();
  rows.reserve(nvals());
  for (Index i = 0; i < nrows_; ++i)
    for (Index p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) rows.push_back(i);
  cols = col_idx_;
  vals = vals_;
}

void SparseMatrix::validate() const {
  if (row_ptr_.size() != nrows_ + 1)
    fail(ErrCode::InvalidMatrix, "row_ptr length is not nrows+1");
  if (row_ptr_.front() != 0) fail(ErrCode::InvalidMatrix, "row_ptr[0] is not 0");
  if (row_ptr_.back() != col_idx_.size())
    fail(ErrCode::InvalidMatrix, "row_ptr[nrows] does not equal nvals");
  if (col_idx_.size() != vals_.size())
    fail(ErrCode::InvalidMatrix, "column/value length mismatch");
  for (Index i = 0; i < nrows_; ++i) {
    if (row_ptr_[i] > row_ptr_[i + 1])
      fail(ErrCode::InvalidMatrix, "row_ptr not nondecreasing");
    for (Index p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
      if (col_idx_[p] >= ncols_)
        fail(ErrCode::InvalidMatrix, "column index out of range");
      if (p > row_ptr_[i] && col_idx_[p - 1] >= col_idx_[p])
        fail(ErrCode::InvalidMatrix, "row columns not strictly increasing");
      if (domain_of(vals_[p]) != domain_)
        fail(ErrCode::InvalidMatrix, "value domain mismatch");
    }
  }
}

// ---- builders -------------------------------------------------------------

SparseMatrix build_matrix(Index nrows, Index ncols, std::span<const Index> rows,
                          std::span<const Index> cols,
                          std::span<const Scalar> vals, const BinaryOp& dup) {
  if (rows.size() != cols.size() || rows.size() != vals.size())
    fail(ErrCode::DimensionMismatch, "build_matrix tuple arrays disagree in length");
  SparseMatrix C(nrows, ncols, vals.empty() ? dup.out : domain_of(vals[0]));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] >= nrows || cols[k] >= ncols)
      fail(ErrCode::IndexOutOfBounds, "build_matrix tuple " + std::to_string(k));
    if (domain_of(vals[k]) != C.domain())
      fail(ErrCode::DomainMismatch, "build_matrix tuple " + std::to_string(k));
  }

  // Sort tuple order (stable) so duplicates combine in input order.
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows[a] != rows[b] ? rows[a] < rows[b] : cols[a] < cols[b];
  });

  std::vector<Index> row_ptr(nrows + 1, 0);
  std::vector<Index> col_idx;
  std::vector<Scalar> out_vals;
  col_idx.reserve(rows.size());
  out_vals.reserve(rows.size());
  for (std::size_t t = 0; t < order.size(); ++t) {
    std::size_t k = order[t];
    if (!col_idx.empty() && t > 0) {
      std::size_t prev = order[t - 1];
      if (rows[prev] == rows[k] && cols[prev] == cols[k]) {
        out_vals.back() = dup(out_vals.back(), vals[k], rows[k], 0, cols[k]);
        continue;
      }
    }
    ++row_ptr[rows[k] + 1];
    col_idx.push_back(cols[k]);
    out_vals.push_back(vals[k]);
  }
  for (Index i = 0; i < nrows; ++i) row_ptr[i + 1] += row_ptr[i];
  C.adopt(std::move(row_ptr), std::move(col_idx), std::move(out_vals));
  return C;
}

SparseVector build_vector(Index n, std::span<const Index> idx,
                          std::span<const Scalar> vals, const BinaryOp& dup) {
  if (idx.size() != vals.size())
    fail(ErrCode::DimensionMismatch, "build_vector tuple arrays disagree in length");
  SparseVector w(n, vals.empty() ? dup.out : domain_of(vals[0]));
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= n) fail(ErrCode::IndexOutOfBounds, "build_vector tuple " + std::to_string(k));
    if (domain_of(vals[k]) != w.domain())
      fail(ErrCode::DomainMismatch, "build_vector tuple " + std::to_string(k));
  }

  std::vector<std::size_t> order(idx.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return idx[a] < idx[b]; });

  std::vector<Index> out_idx;
  std::vector<Scalar> out_vals;
  for (std::size_t t = 0; t < order.size(); ++t) {
    std::size_t k = order[t];
    if (!out_idx.empty() && out_idx.back() == idx[k]) {
      out_vals.back() = dup(out_vals.back(), vals[k], idx[k], 0, 0);
      continue;
    }
    out_idx.push_back(idx[k]);
    out_vals.push_back(vals[k]);
  }
  w.adopt(std::move(out_idx), std::move(out_vals));
  return w;
}

}  // namespace gblite
