// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gblite/containers.hpp"
#include "gblite/ops.hpp"

namespace gblite {

// Output mask. With no source the mask selects every position. A valued mask
// selects positions whose entry exists and is nonzero/true; a structural mask
// selects positions whose entry exists. Complement inverts membership after
// that rule. Replace deletes prior output entries that fall outside the mask
// (merge, the default, keeps them).
struct MaskSpec {
  const SparseMatrix* matrix = nullptr;
  const SparseVector* vector = nullptr;
  bool complement = false;
  bool structural = false;
  bool replace = false;
};

// Per-call modifiers: mask, optional accumulator, input transposes.
//
// Every operation computes its result T, then applies one shared post-step:
// positions outside the mask keep (merge) or lose (replace) their prior
// entry; positions inside the mask combine T with the prior entry through
// the accumulator when both exist, take T when only T exists, and keep the
// prior entry when T has no entry there.
struct Descriptor {
  MaskSpec mask;
  std::optional<BinaryOp> accum;
  bool transpose_in1 = false;
  bool transpose_in2 = false;

  Descriptor& mask_of(const SparseMatrix& m) {
    mask.matrix = &m;
    return *this;
  }
  Descriptor& mask_of(const SparseVector& v) {
    mask.vector = &v;
    return *this;
  }
  Descriptor& complemented() {
    mask.complement = true;
    return *this;
  }
  Descriptor& structural() {
    mask.structural = true;
    return *this;
  }
  Descriptor& replace() {
    mask.replace = true;
    return *this;
  }
  Descriptor& accumulate(const BinaryOp& op) {
    accum = op;
    return *this;
  }
  Descriptor& transpose_a() {
    transpose_in1 = true;
    return *this;
  }
  Descriptor& transpose_b() {
    transpose_in2 = true;
    return *this;
  }
};

// Row/column index selection: a list of indices, or all of them.
struct IndexSel {
  IndexSel() = default;  // all indices
  IndexSel(std::span<const Index> list) : list_(list), all_(false) {}
  IndexSel(const std::vector<Index>& list)
      : list_(list.data(), list.size()), all_(false) {}

  static IndexSel all() { return IndexSel(); }

  bool is_all() const { return all_; }
  Index count(Index dim) const { return all_ ? dim : list_.size(); }
  Index map(Index k) const { return all_ ? k : list_[k]; }
  std::span<const Index> list() const { return list_; }

 private:
  std::span<const Index> list_;
  bool all_ = true;
};

inline const IndexSel kAll{};

// ---- matrix multiplication family ------------------------------------------
// T(i,j) = add_k mult(A(i,k), B(k,j)) over k where both entries exist; an
// output entry exists iff at least one such k does. The transpose flags of
// the descriptor apply to A (in1) and B (in2).
void mxm(SparseMatrix& C, const Descriptor& desc, const Semiring& semiring,
         const SparseMatrix& A, const SparseMatrix& B);

// T(j) = add_k mult(u(k), A(k,j)); transpose_in2 transposes A.
void vxm(SparseVector& w, const Descriptor& desc, const Semiring& semiring,
         const SparseVector& u, const SparseMatrix& A);

// T(i) = add_k mult(A(i,k), u(k)); transpose_in1 transposes A.
void mxv(SparseVector& w, const Descriptor& desc, const Semiring& semiring,
         const SparseMatrix& A, const SparseVector& u);

// ---- element-wise -----------------------------------------------------------
// Union of structures; positions present in one input pass through unchanged.
void ewise_add(SparseVector& w, const Descriptor& desc, const BinaryOp& op,
               const SparseVector& a, const SparseVector& b);
void ewise_add(SparseMatrix& C, const Descriptor& desc, const BinaryOp& op,
               const SparseMatrix& A, const SparseMatrix& B);

// Intersection of structures.
void ewise_mult(SparseVector& w, const Descriptor& desc, const BinaryOp& op,
                const SparseVector& a, const SparseVector& b);
void ewise_mult(SparseMatrix& C, const Descriptor& desc, const BinaryOp& op,
                const SparseMatrix& A, const SparseMatrix& B);

// ---- extract / assign -------------------------------------------------------
// C(p,q) = A(rows[p], cols[q]) where present; C has shape (|rows|, |cols|).
void extract(SparseMatrix& C, const Descriptor& desc, const SparseMatrix& A,
             const IndexSel& rows, const IndexSel& cols);
// w(p) = A(rows[p], col): one column of A.
void extract_col(SparseVector& w, const Descriptor& desc, const SparseMatrix& A,
                 const IndexSel& rows, Index col);
// w(p) = u(idx[p]): subvector gather.
void extract(SparseVector& w, const Descriptor& desc, const SparseVector& u,
             const IndexSel& idx);

// Scatter source (or broadcast a scalar) onto target positions (rows × cols).
// The mask is interpreted over the full target index space. Duplicate
// positions in the selection combine through the accumulator when present,
// otherwise the later one wins.
void assign(SparseMatrix& C, const Descriptor& desc, const IndexSel& rows,
            const IndexSel& cols, const SparseMatrix& A);
void assign(SparseMatrix& C, const Descriptor& desc, const IndexSel& rows,
            const IndexSel& cols, const Scalar& s);
void assign(SparseVector& w, const Descriptor& desc, const IndexSel& idx,
            const SparseVector& u);
void assign(SparseVector& w, const Descriptor& desc, const IndexSel& idx,
            const Scalar& s);

// ---- apply / select -------------------------------------------------------
void apply(SparseVector& w, const Descriptor& desc, const UnaryOp& f,
           const SparseVector& u);
void apply(SparseMatrix& C, const Descriptor& desc, const UnaryOp& f,
           const SparseMatrix& A);

void select(SparseVector& w, const Descriptor& desc, const SelectOp& pred,
            const SparseVector& u);
void select(SparseMatrix& C, const Descriptor& desc, const SelectOp& pred,
            const SparseMatrix& A);

// ---- reduce / transpose -------------------------------------------------
// Row-wise reduction to a column vector; entries only for non-empty rows.
// transpose_in1 reduces columns instead.
void reduce_rows(SparseVector& w, const Descriptor& desc, const Monoid& monoid,
                 const SparseMatrix& A);

// Reduction to a scalar; an empty container reduces to the monoid identity.
// With an accumulator, s_out = accum(s_in, total).
void reduce_scalar(Scalar& s, const std::optional<BinaryOp>& accum,
                   const Monoid& monoid, const SparseMatrix& A);
void reduce_scalar(Scalar& s, const std::optional<BinaryOp>& accum,
                   const Monoid& monoid, const SparseVector& u);

void transpose(SparseMatrix& C, const Descriptor& desc, const SparseMatrix& A);

}  // namespace gblite
