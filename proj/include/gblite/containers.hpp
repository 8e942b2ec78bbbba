// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gblite/ops.hpp"
#include "gblite/value.hpp"

namespace gblite {

// Sparse vector: strictly increasing indices, values in a single domain.
// Absent entries act as the identity of whichever monoid an operation uses.
class SparseVector {
 public:
  SparseVector() = default;
  SparseVector(Index n, Domain domain) : n_(n), domain_(domain) {}

  Index size() const { return n_; }
  Domain domain() const { return domain_; }
  Index nvals() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }

  const std::vector<Index>& indices() const { return idx_; }
  const std::vector<Scalar>& values() const { return vals_; }

  void clear() {
    idx_.clear();
    vals_.clear();
  }

  SparseVector dup() const { return *this; }

  // Inserts or overwrites one entry.
  void set_element(Index i, const Scalar& value);

  // Returns the value, or nullopt when the position is empty (the NoValue
  // warning case; not an error).
  std::optional<Scalar> extract_element(Index i) const;

  // Index/value arrays in ascending index order.
  void extract_tuples(std::vector<Index>& idx, std::vector<Scalar>& vals) const;

  // Throws InvalidMatrix when an invariant is broken.
  void validate() const;

  // Internal: adopt sorted storage. Callers guarantee the invariants.
  void adopt(std::vector<Index>&& idx, std::vector<Scalar>&& vals) {
    idx_ = std::move(idx);
    vals_ = std::move(vals);
  }

 private:
  Index n_ = 0;
  Domain domain_ = Domain::Bool;
  std::vector<Index> idx_;
  std::vector<Scalar> vals_;
};

// CSR sparse matrix: row_ptr of length nrows+1, strictly increasing column
// indices within each row, values in a single domain. Explicit zeros are
// representable and distinct from absent entries.
class SparseMatrix {
 public:
  SparseMatrix() { row_ptr_.assign(1, 0); }
  SparseMatrix(Index nrows, Index ncols, Domain domain)
      : nrows_(nrows), ncols_(ncols), domain_(domain) {
    row_ptr_.assign(nrows_ + 1, 0);
  }

  Index nrows() const { return nrows_; }
  Index ncols() const { return ncols_; }
  Domain domain() const { return domain_; }
  Index nvals() const { return col_idx_.size(); }

  const std::vector<Index>& row_ptr() const { return row_ptr_; }
  const std::vector<Index>& col_idx() const { return col_idx_; }
  const std::vector<Scalar>& values() const { return vals_; }

  std::span<const Index> row_cols(Index i) const {
    return {col_idx_.data() + row_ptr_[i], col_idx_.data() + row_ptr_[i + 1]};
  }
  std::span<const Scalar> row_vals(Index i) const {
    return {vals_.data() + row_ptr_[i], vals_.data() + row_ptr_[i + 1]};
  }

  void clear() {
    row_ptr_.assign(nrows_ + 1, 0);
    col_idx_.clear();
    vals_.clear();
  }

  SparseMatrix dup() const { return *this; }

  void set_element(Index i, Index j, const Scalar& value);
  std::optional<Scalar> extract_element(Index i, Index j) const;
  void extract_tuples(std::vector<Index>& rows, std::vector<Index>& cols,
                      std::vector<Scalar>& vals) const;

  void validate() const;

  void adopt(std::vector<Index>&& row_ptr, std::vector<Index>&& col_idx,
             std::vector<Scalar>&& vals) {
    row_ptr_ = std::move(row_ptr);
    col_idx_ = std::move(col_idx);
    vals_ = std::move(vals);
  }

 private:
  Index nrows_ = 0;
  Index ncols_ = 0;
  Domain domain_ = Domain::Bool;
  std::vector<Index> row_ptr_;
  std::vector<Index> col_idx_;
  std::vector<Scalar> vals_;
};

// Build from tuples; duplicate positions are combined with dup, applied in
// input order.
SparseMatrix build_matrix(Index nrows, Index ncols, std::span<const Index> rows,
                          std::span<const Index> cols,
                          std::span<const Scalar> vals, const BinaryOp& dup);

SparseVector build_vector(Index n, std::span<const Index> idx,
                          std::span<const Scalar> vals, const BinaryOp& dup);

}  // namespace gblite
