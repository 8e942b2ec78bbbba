// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#include "gblite/core.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace gblite {

namespace {

// Container validation runs after every operation unless NDEBUG is set.
#ifndef NDEBUG
#define GBLITE_VALIDATE(c) (c).validate()
#else
#define GBLITE_VALIDATE(c) ((void)0)
#endif

// ---- result staging ---------------------------------------------------------

struct TmpVec {
  std::vector<Index> idx;
  std::vector<Scalar> vals;
};

struct TmpRows {
  explicit TmpRows(Index nrows) : idx(nrows), vals(nrows) {}
  std::vector<std::vector<Index>> idx;
  std::vector<std::vector<Scalar>> vals;
};

// ---- shared checks --------------------------------------------------------

void check_no_alias(const void* out, std::initializer_list<const void*> inputs) {
  for (const void* p : inputs)
    if (p != nullptr && p == out)
      fail(ErrCode::AliasedOutput, "output container aliases an input");
}

void check_vector_mask(const MaskSpec& mask, Index n) {
  if (mask.matrix != nullptr)
    fail(ErrCode::DimensionMismatch, "vector operation given a matrix mask");
  if (mask.vector != nullptr && mask.vector->size() != n)
    fail(ErrCode::DimensionMismatch, "mask length does not match output");
}

void check_matrix_mask(const MaskSpec& mask, Index nrows, Index ncols) {
  if (mask.vector != nullptr)
    fail(ErrCode::DimensionMismatch, "matrix operation given a vector mask");
  if (mask.matrix != nullptr &&
      (mask.matrix->nrows() != nrows || mask.matrix->ncols() != ncols))
    fail(ErrCode::DimensionMismatch, "mask shape does not match output");
}

void check_out_domain(Domain have, Domain want, const char* what) {
  if (have != want)
    fail(ErrCode::DomainMismatch, std::string(what) + ": output container is " +
                                      domain_name(have) + ", result is " +
                                      domain_name(want));
}

void check_op_inputs(const BinaryOp& op, Domain in1, Domain in2, const char* what) {
  if (op.uses_in1 && op.in1 != in1)
    fail(ErrCode::DomainMismatch,
         std::string(what) + ": first input is " + domain_name(in1) + ", " +
             op.name + " expects " + domain_name(op.in1));
  if (op.uses_in2 && op.in2 != in2)
    fail(ErrCode::DomainMismatch,
         std::string(what) + ": second input is " + domain_name(in2) + ", " +
             op.name + " expects " + domain_name(op.in2));
}

void check_accum(const std::optional<BinaryOp>& accum, Domain cdom, Domain tdom) {
  if (!accum) return;
  check_op_inputs(*accum, cdom, tdom, "accumulator");
  if (accum->out != cdom)
    fail(ErrCode::DomainMismatch, "accumulator output domain differs from target");
}

// ---- mask cursors -----------------------------------------------------------

// Membership probe over one sorted index list; positions must be queried in
// ascending order.
struct MaskCursor {
  const Index* idx = nullptr;
  const Scalar* vals = nullptr;
  std::size_t len = 0;
  bool structural = false;
  bool complement = false;
  bool all = true;
  std::size_t pos = 0;

  bool member(Index p) {
    if (all) return true;
    while (pos < len && idx[pos] < p) ++pos;
    bool in = false;
    if (pos < len && idx[pos] == p)
      in = structural || is_nonzero(vals[pos]);
    return in != complement;
  }
};

MaskCursor vector_mask_cursor(const MaskSpec& mask) {
  MaskCursor c;
  if (mask.vector == nullptr) return c;
  c.all = false;
  c.idx = mask.vector->indices().data();
  c.vals = mask.vector->values().data();
  c.len = mask.vector->nvals();
  c.structural = mask.structural;
  c.complement = mask.complement;
  return c;
}

MaskCursor matrix_mask_row_cursor(const MaskSpec& mask, Index row) {
  MaskCursor c;
  if (mask.matrix == nullptr) return c;
  auto cols = mask.matrix->row_cols(row);
  auto vals = mask.matrix->row_vals(row);
  c.all = false;
  c.idx = cols.data();
  c.vals = vals.data();
  c.len = cols.size();
  c.structural = mask.structural;
  c.complement = mask.complement;
  return c;
}

// ---- the shared mask/accumulator post-step ---------------------------------
//
// For each output position p: outside the mask the prior entry is kept
// (merge) or deleted (replace); inside the mask, accum(prior, T(p)) is
// written when both exist, T(p) when only T exists, and the prior entry is
// kept when T has no entry at p.

void merge_entries(std::span<const Index> cidx, std::span<const Scalar> cvals,
                   std::span<const Index> tidx, std::span<const Scalar> tvals,
                   MaskCursor maskc, const std::optional<BinaryOp>& accum,
                   bool replace, Index row_for_accum,
                   std::vector<Index>& out_idx, std::vector<Scalar>& out_vals) {
  std::size_t ci = 0, ti = 0;
  while (ci < cidx.size() || ti < tidx.size()) {
    bool has_c = ci < cidx.size();
    bool has_t = ti < tidx.size();
    Index p;
    if (has_c && has_t)
      p = std::min(cidx[ci], tidx[ti]);
    else
      p = has_c ? cidx[ci] : tidx[ti];
    has_c = has_c && cidx[ci] == p;
    has_t = has_t && tidx[ti] == p;

    if (maskc.member(p)) {
      if (has_t) {
        if (has_c && accum) {
          out_idx.push_back(p);
          out_vals.push_back((*accum)(cvals[ci], tvals[ti], row_for_accum, 0, p));
        } else {
          out_idx.push_back(p);
          out_vals.push_back(tvals[ti]);
        }
      } else {  // prior only
        out_idx.push_back(p);
        out_vals.push_back(cvals[ci]);
      }
    } else if (has_c && !replace) {
      out_idx.push_back(p);
      out_vals.push_back(cvals[ci]);
    }
    if (has_c) ++ci;
    if (has_t) ++ti;
  }
}

void post_step(SparseVector& w, TmpVec&& T, const Descriptor& desc) {
  check_vector_mask(desc.mask, w.size());
  check_accum(desc.accum, w.domain(), w.domain());
  std::vector<Index> out_idx;
  std::vector<Scalar> out_vals;
  merge_entries(w.indices(), w.values(), T.idx, T.vals,
                vector_mask_cursor(desc.mask), desc.accum, desc.mask.replace, 0,
                out_idx, out_vals);
  w.adopt(std::move(out_idx), std::move(out_vals));
  GBLITE_VALIDATE(w);
}

void post_step(SparseMatrix& C, TmpRows&& T, const Descriptor& desc) {
  check_matrix_mask(desc.mask, C.nrows(), C.ncols());
  check_accum(desc.accum, C.domain(), C.domain());
  std::vector<Index> row_ptr(C.nrows() + 1, 0);
  std::vector<Index> col_idx;
  std::vector<Scalar> vals;
  for (Index i = 0; i < C.nrows(); ++i) {
    std::size_t before = col_idx.size();
    merge_entries(C.row_cols(i), C.row_vals(i), T.idx[i], T.vals[i],
                  matrix_mask_row_cursor(desc.mask, i), desc.accum,
                  desc.mask.replace, i, col_idx, vals);
    row_ptr[i + 1] = row_ptr[i] + (col_idx.size() - before);
  }
  C.adopt(std::move(row_ptr), std::move(col_idx), std::move(vals));
  GBLITE_VALIDATE(C);
}

// ---- scratch accumulator for multiplication kernels -------------------------

struct DenseAcc {
  explicit DenseAcc(Index n) : seen(n, 0), val(n) {}
  std::vector<char> seen;
  std::vector<Scalar> val;
  std::vector<Index> touched;

  void add(Index j, const Scalar& v, const Monoid& monoid, Index i, Index k) {
    if (!seen[j]) {
      seen[j] = 1;
      val[j] = v;
      touched.push_back(j);
    } else {
      val[j] = monoid.op(val[j], v, i, k, j);
    }
  }

  void harvest(std::vector<Index>& idx, std::vector<Scalar>& vals) {
    std::sort(touched.begin(), touched.end());
    idx = touched;
    vals.clear();
    vals.reserve(touched.size());
    for (Index j : touched) {
      vals.push_back(val[j]);
      seen[j] = 0;
    }
    touched.clear();
  }
};

SparseMatrix plain_transpose(const SparseMatrix& A) {
  SparseMatrix T(A.ncols(), A.nrows(), A.domain());
  std::vector<Index> row_ptr(A.ncols() + 1, 0);
  for (Index p = 0; p < A.nvals(); ++p) ++row_ptr[A.col_idx()[p] + 1];
  for (Index j = 0; j < A.ncols(); ++j) row_ptr[j + 1] += row_ptr[j];
  std::vector<Index> col_idx(A.nvals());
  std::vector<Scalar> vals(A.nvals());
  std::vector<Index> cursor(row_ptr.begin(), row_ptr.end() - 1);
  for (Index i = 0; i < A.nrows(); ++i) {
    auto cols = A.row_cols(i);
    auto v = A.row_vals(i);
    for (std::size_t p = 0; p < cols.size(); ++p) {
      Index dst = cursor[cols[p]]++;
      col_idx[dst] = i;
      vals[dst] = v[p];
    }
  }
  T.adopt(std::move(row_ptr), std::move(col_idx), std::move(vals));
  return T;
}

void check_semiring(const Semiring& s) {
  if (s.mult.out != domain_of(s.add.identity) || s.add.op.out != s.mult.out)
    fail(ErrCode::DomainMismatch, "semiring multiply/add domains disagree");
}

}  // namespace

// ---- multiplication family --------------------------------------------------

void mxm(SparseMatrix& C, const Descriptor& desc, const Semiring& semiring,
         const SparseMatrix& A, const SparseMatrix& B) {
  check_no_alias(&C, {&A, &B, desc.mask.matrix});
  check_semiring(semiring);
  SparseMatrix At_storage, Bt_storage;
  const SparseMatrix* ap = &A;
  const SparseMatrix* bp = &B;
  if (desc.transpose_in1) {
    At_storage = plain_transpose(A);
    ap = &At_storage;
  }
  if (desc.transpose_in2) {
    Bt_storage = plain_transpose(B);
    bp = &Bt_storage;
  }
  if (ap->ncols() != bp->nrows())
    fail(ErrCode::DimensionMismatch, "mxm inner dimensions disagree");
  if (C.nrows() != ap->nrows() || C.ncols() != bp->ncols())
    fail(ErrCode::DimensionMismatch, "mxm output shape");
  check_op_inputs(semiring.mult, ap->domain(), bp->domain(), "mxm");
  check_out_domain(C.domain(), semiring.add.op.out, "mxm");

  TmpRows T(C.nrows());
  DenseAcc acc(bp->ncols());
  for (Index i = 0; i < ap->nrows(); ++i) {
    auto acols = ap->row_cols(i);
    auto avals = ap->row_vals(i);
    for (std::size_t p = 0; p < acols.size(); ++p) {
      Index k = acols[p];
      auto bcols = bp->row_cols(k);
      auto bvals = bp->row_vals(k);
      for (std::size_t q = 0; q < bcols.size(); ++q) {
        Index j = bcols[q];
        acc.add(j, semiring.mult(avals[p], bvals[q], i, k, j), semiring.add, i, k);
      }
    }
    acc.harvest(T.idx[i], T.vals[i]);
  }
  post_step(C, std::move(T), desc);
}

void vxm(SparseVector& w, const Descriptor& desc, const Semiring& semiring,
         const SparseVector& u, const SparseMatrix& A) {
  check_no_alias(&w, {&u, &A, desc.mask.vector});
  check_semiring(semiring);
  SparseMatrix At_storage;
  const SparseMatrix* ap = &A;
  if (desc.transpose_in2) {
    At_storage = plain_transpose(A);
    ap = &At_storage;
  }
  if (u.size() != ap->nrows())
    fail(ErrCode::DimensionMismatch, "vxm vector length does not match rows");
  if (w.size() != ap->ncols())
    fail(ErrCode::DimensionMismatch, "vxm output length");
  check_op_inputs(semiring.mult, u.domain(), ap->domain(), "vxm");
  check_out_domain(w.domain(), semiring.add.op.out, "vxm");

  TmpVec T;
  DenseAcc acc(ap->ncols());
  for (std::size_t p = 0; p < u.nvals(); ++p) {
    Index k = u.indices()[p];
    auto cols = ap->row_cols(k);
    auto vals = ap->row_vals(k);
    for (std::size_t q = 0; q < cols.size(); ++q) {
      Index j = cols[q];
      acc.add(j, semiring.mult(u.values()[p], vals[q], 0, k, j), semiring.add, 0, k);
    }
  }
  acc.harvest(T.idx, T.vals);
  post_step(w, std::move(T), desc);
}

void mxv(SparseVector& w, const Descriptor& desc, const Semiring& semiring,
         const SparseMatrix& A, const SparseVector& u) {
  check_no_alias(&w, {&u, &A, desc.mask.vector});
  check_semiring(semiring);
  SparseMatrix At_storage;
  const SparseMatrix* ap = &A;
  if (desc.transpose_in1) {
    At_storage = plain_transpose(A);
    ap = &At_storage;
  }
  if (ap->ncols() != u.size())
    fail(ErrCode::DimensionMismatch, "mxv vector length does not match columns");
  if (w.size() != ap->nrows())
    fail(ErrCode::DimensionMismatch, "mxv output length");
  check_op_inputs(semiring.mult, ap->domain(), u.domain(), "mxv");
  check_out_domain(w.domain(), semiring.add.op.out, "mxv");

  TmpVec T;
  const auto& uidx = u.indices();
  const auto& uvals = u.values();
  for (Index i = 0; i < ap->nrows(); ++i) {
    auto cols = ap->row_cols(i);
    auto vals = ap->row_vals(i);
    std::size_t a = 0, b = 0;
    bool any_hit = false;
    Scalar accv;
    while (a < cols.size() && b < uidx.size()) {
      if (cols[a] < uidx[b]) {
        ++a;
      } else if (cols[a] > uidx[b]) {
        ++b;
      } else {
        Index k = cols[a];
        Scalar v = semiring.mult(vals[a], uvals[b], i, k, 0);
        accv = any_hit ? semiring.add.op(accv, v, i, k, 0) : v;
        any_hit = true;
        ++a;
        ++b;
      }
    }
    if (any_hit) {
      T.idx.push_back(i);
      T.vals.push_back(accv);
    }
  }
  post_step(w, std::move(T), desc);
}

// ---- element-wise -----------------------------------------------------------

namespace {

void ewise_union_lists(const BinaryOp& op, std::span<const Index> aidx,
                       std::span<const Scalar> avals, std::span<const Index> bidx,
                       std::span<const Scalar> bvals, Index row, TmpVec& out) {
  std::size_t a = 0, b = 0;
  while (a < aidx.size() || b < bidx.size()) {
    bool ha = a < aidx.size();
    bool hb = b < bidx.size();
    Index p = ha && hb ? std::min(aidx[a], bidx[b]) : (ha ? aidx[a] : bidx[b]);
    ha = ha && aidx[a] == p;
    hb = hb && bidx[b] == p;
    out.idx.push_back(p);
    if (ha && hb)
      out.vals.push_back(op(avals[a], bvals[b], row, 0, p));
    else
      out.vals.push_back(ha ? avals[a] : bvals[b]);
    if (ha) ++a;
    if (hb) ++b;
  }
}

void ewise_isect_lists(const BinaryOp& op, std::span<const Index> aidx,
                       std::span<const Scalar> avals, std::span<const Index> bidx,
                       std::span<const Scalar> bvals, Index row, TmpVec& out) {
  std::size_t a = 0, b = 0;
  while (a < aidx.size() && b < bidx.size()) {
    if (aidx[a] < bidx[b]) {
      ++a;
    } else if (aidx[a] > bidx[b]) {
      ++b;
    } else {
      out.idx.push_back(aidx[a]);
      out.vals.push_back(op(avals[a], bvals[b], row, 0, aidx[a]));
      ++a;
      ++b;
    }
  }
}

// Union semantics pass single-sided values through unchanged, so all three
// operator domains must match the inputs.
void check_union_op(const BinaryOp& op, Domain da, Domain db) {
  if (da != db || op.out != da)
    fail(ErrCode::DomainMismatch, "ewise_add requires one shared domain");
  check_op_inputs(op, da, db, "ewise_add");
}

}  // namespace

void ewise_add(SparseVector& w, const Descriptor& desc, const BinaryOp& op,
               const SparseVector& a, const SparseVector& b) {
  check_no_alias(&w, {&a, &b, desc.mask.vector});
  if (a.size() != b.size() || w.size() != a.size())
    fail(ErrCode::DimensionMismatch, "ewise_add vector lengths disagree");
  check_union_op(op, a.domain(), b.domain());
  check_out_domain(w.domain(), op.out, "ewise_add");
  TmpVec T;
  ewise_union_lists(op, a.indices(), a.values(), b.indices(), b.values(), 0, T);
  post_step(w, std::move(T), desc);
}

void ewise_add(SparseMatrix& C, const Descriptor& desc, const BinaryOp& op,
               const SparseMatrix& A, const SparseMatrix& B) {
  check_no_alias(&C, {&A, &B, desc.mask.matrix});
  SparseMatrix As, Bs;
  const SparseMatrix* ap = &A;
  const SparseMatrix* bp = &B;
  if (desc.transpose_in1) { As = plain_transpose(A); ap = &As; }
  if (desc.transpose_in2) { Bs = plain_transpose(B); bp = &Bs; }
  if (ap->nrows() != bp->nrows() || ap->ncols() != bp->ncols() ||
      C.nrows() != ap->nrows() || C.ncols() != ap->ncols())
    fail(ErrCode::DimensionMismatch, "ewise_add matrix shapes disagree");
  check_union_op(op, ap->domain(), bp->domain());
  check_out_domain(C.domain(), op.out, "ewise_add");
  TmpRows T(C.nrows());
  for (Index i = 0; i < C.nrows(); ++i) {
    TmpVec row;
    ewise_union_lists(op, ap->row_cols(i), ap->row_vals(i), bp->row_cols(i),
                      bp->row_vals(i), i, row);
    T.idx[i] = std::move(row.idx);
    T.vals[i] = std::move(row.vals);
  }
  post_step(C, std::move(T), desc);
}

void ewise_mult(SparseVector& w, const Descriptor& desc, const BinaryOp& op,
                const SparseVector& a, const SparseVector& b) {
  check_no_alias(&w, {&a, &b, desc.mask.vector});
  if (a.size() != b.size() || w.size() != a.size())
    fail(ErrCode::DimensionMismatch, "ewise_mult vector lengths disagree");
  check_op_inputs(op, a.domain(), b.domain(), "ewise_mult");
  check_out_domain(w.domain(), op.out, "ewise_mult");
  TmpVec T;
  ewise_isect_lists(op, a.indices(), a.values(), b.indices(), b.values(), 0, T);
  post_step(w, std::move(T), desc);
}

void ewise_mult(SparseMatrix& C, const Descriptor& desc, const BinaryOp& op,
                const SparseMatrix& A, const SparseMatrix& B) {
  check_no_alias(&C, {&A, &B, desc.mask.matrix});
  SparseMatrix As, Bs;
  const SparseMatrix* ap = &A;
  const SparseMatrix* bp = &B;
  if (desc.transpose_in1) { As = plain_transpose(A); ap = &As; }
  if (desc.transpose_in2) { Bs = plain_transpose(B); bp = &Bs; }
  if (ap->nrows() != bp->nrows() || ap->ncols() != bp->ncols() ||
      C.nrows() != ap->nrows() || C.ncols() != ap->ncols())
    fail(ErrCode::DimensionMismatch, "ewise_mult matrix shapes disagree");
  check_op_inputs(op, ap->domain(), bp->domain(), "ewise_mult");
  check_out_domain(C.domain(), op.out, "ewise_mult");
  TmpRows T(C.nrows());
  for (Index i = 0; i < C.nrows(); ++i) {
    TmpVec row;
    ewise_isect_lists(op, ap->row_cols(i), ap->row_vals(i), bp->row_cols(i),
                      bp->row_vals(i), i, row);
    T.idx[i] = std::move(row.idx);
    T.vals[i] = std::move(row.vals);
  }
  post_step(C, std::move(T), desc);
}

// ---- extract ----------------------------------------------------------------

namespace {

void check_selection(const IndexSel& sel, Index dim, const char* what) {
  if (sel.is_all()) return;
  for (Index k : sel.list())
    if (k >= dim)
      fail(ErrCode::IndexOutOfBounds,
           std::string(what) + " selection index " + std::to_string(k));
}

}  // namespace

void extract(SparseMatrix& C, const Descriptor& desc, const SparseMatrix& A,
             const IndexSel& rows, const IndexSel& cols) {
  check_no_alias(&C, {&A, desc.mask.matrix});
  check_selection(rows, A.nrows(), "extract row");
  check_selection(cols, A.ncols(), "extract column");
  Index nr = rows.count(A.nrows());
  Index nc = cols.count(A.ncols());
  if (C.nrows() != nr || C.ncols() != nc)
    fail(ErrCode::DimensionMismatch, "extract output shape");
  check_out_domain(C.domain(), A.domain(), "extract");

  TmpRows T(nr);
  for (Index p = 0; p < nr; ++p) {
    Index i = rows.map(p);
    if (cols.is_all()) {
      auto c = A.row_cols(i);
      auto v = A.row_vals(i);
      T.idx[p].assign(c.begin(), c.end());
      T.vals[p].assign(v.begin(), v.end());
    } else {
      for (Index q = 0; q < nc; ++q) {
        if (auto e = A.extract_element(i, cols.map(q))) {
          T.idx[p].push_back(q);
          T.vals[p].push_back(*e);
        }
      }
    }
  }
  post_step(C, std::move(T), desc);
}

void extract_col(SparseVector& w, const Descriptor& desc, const SparseMatrix& A,
                 const IndexSel& rows, Index col) {
  check_no_alias(&w, {&A, desc.mask.vector});
  check_selection(rows, A.nrows(), "extract row");
  if (col >= A.ncols()) fail(ErrCode::IndexOutOfBounds, "extract column index");
  Index nr = rows.count(A.nrows());
  if (w.size() != nr) fail(ErrCode::DimensionMismatch, "extract output length");
  check_out_domain(w.domain(), A.domain(), "extract");
  TmpVec T;
  for (Index p = 0; p < nr; ++p) {
    if (auto e = A.extract_element(rows.map(p), col)) {
      T.idx.push_back(p);
      T.vals.push_back(*e);
    }
  }
  post_step(w, std::move(T), desc);
}

void extract(SparseVector& w, const Descriptor& desc, const SparseVector& u,
             const IndexSel& idx) {
  check_no_alias(&w, {&u, desc.mask.vector});
  check_selection(idx, u.size(), "extract");
  Index n = idx.count(u.size());
  if (w.size() != n) fail(ErrCode::DimensionMismatch, "extract output length");
  check_out_domain(w.domain(), u.domain(), "extract");
  TmpVec T;
  for (Index p = 0; p < n; ++p) {
    if (auto e = u.extract_element(idx.map(p))) {
      T.idx.push_back(p);
      T.vals.push_back(*e);
    }
  }
  post_step(w, std::move(T), desc);
}

// ---- assign -----------------------------------------------------------------

namespace {

// Collect scattered (position, value) pairs into sorted unique lists.
// Duplicate positions combine through the accumulator when present,
// otherwise the later contribution wins.
void settle_duplicates(std::vector<std::pair<Index, Scalar>>& entries,
                       const std::optional<BinaryOp>& accum, Index row,
                       std::vector<Index>& out_idx, std::vector<Scalar>& out_vals) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [p, v] : entries) {
    if (!out_idx.empty() && out_idx.back() == p) {
      out_vals.back() = accum ? (*accum)(out_vals.back(), v, row, 0, p) : v;
    } else {
      out_idx.push_back(p);
      out_vals.push_back(v);
    }
  }
}

}  // namespace

void assign(SparseMatrix& C, const Descriptor& desc, const IndexSel& rows,
            const IndexSel& cols, const SparseMatrix& A) {
  check_no_alias(&C, {&A, desc.mask.matrix});
  check_selection(rows, C.nrows(), "assign row");
  check_selection(cols, C.ncols(), "assign column");
  if (A.nrows() != rows.count(C.nrows()) || A.ncols() != cols.count(C.ncols()))
    fail(ErrCode::DimensionMismatch, "assign source shape does not match selection");
  check_out_domain(C.domain(), A.domain(), "assign");

  std::vector<std::vector<std::pair<Index, Scalar>>> scattered(C.nrows());
  for (Index p = 0; p < A.nrows(); ++p) {
    Index i = rows.map(p);
    auto c = A.row_cols(p);
    auto v = A.row_vals(p);
    for (std::size_t q = 0; q < c.size(); ++q)
      scattered[i].emplace_back(cols.map(c[q]), v[q]);
  }
  TmpRows T(C.nrows());
  for (Index i = 0; i < C.nrows(); ++i)
    settle_duplicates(scattered[i], desc.accum, i, T.idx[i], T.vals[i]);
  post_step(C, std::move(T), desc);
}

void assign(SparseMatrix& C, const Descriptor& desc, const IndexSel& rows,
            const IndexSel& cols, const Scalar& s) {
  check_no_alias(&C, {desc.mask.matrix});
  check_selection(rows, C.nrows(), "assign row");
  check_selection(cols, C.ncols(), "assign column");
  check_out_domain(C.domain(), domain_of(s), "assign");

  // Broadcast: T holds s at every selected position (duplicates are one
  // position).
  std::vector<Index> col_list;
  if (cols.is_all()) {
    col_list.resize(C.ncols());
    std::iota(col_list.begin(), col_list.end(), 0);
  } else {
    col_list.assign(cols.list().begin(), cols.list().end());
    std::sort(col_list.begin(), col_list.end());
    col_list.erase(std::unique(col_list.begin(), col_list.end()), col_list.end());
  }
  std::vector<char> row_hit(C.nrows(), 0);
  Index nrsel = rows.count(C.nrows());
  for (Index p = 0; p < nrsel; ++p) row_hit[rows.map(p)] = 1;

  TmpRows T(C.nrows());
  for (Index i = 0; i < C.nrows(); ++i) {
    if (!row_hit[i]) continue;
    T.idx[i] = col_list;
    T.vals[i].assign(col_list.size(), s);
  }
  post_step(C, std::move(T), desc);
}

void assign(SparseVector& w, const Descriptor& desc, const IndexSel& idx,
            const SparseVector& u) {
  check_no_alias(&w, {&u, desc.mask.vector});
  check_selection(idx, w.size(), "assign");
  if (u.size() != idx.count(w.size()))
    fail(ErrCode::DimensionMismatch, "assign source length does not match selection");
  check_out_domain(w.domain(), u.domain(), "assign");

  std::vector<std::pair<Index, Scalar>> scattered;
  scattered.reserve(u.nvals());
  for (std::size_t p = 0; p < u.nvals(); ++p)
    scattered.emplace_back(idx.map(u.indices()[p]), u.values()[p]);
  TmpVec T;
  settle_duplicates(scattered, desc.accum, 0, T.idx, T.vals);
  post_step(w, std::move(T), desc);
}

void assign(SparseVector& w, const Descriptor& desc, const IndexSel& idx,
            const Scalar& s) {
  check_no_alias(&w, {desc.mask.vector});
  check_selection(idx, w.size(), "assign");
  check_out_domain(w.domain(), domain_of(s), "assign");
  std::vector<Index> positions;
  if (idx.is_all()) {
    positions.resize(w.size());
    std::iota(positions.begin(), positions.end(), 0);
  } else {
    positions.assign(idx.list().begin(), idx.list().end());
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  }
  TmpVec T;
  T.idx = std::move(positions);
  T.vals.assign(T.idx.size(), s);
  post_step(w, std::move(T), desc);
}

// ---- apply / select ---------------------------------------------------------

void apply(SparseVector& w, const Descriptor& desc, const UnaryOp& f,
           const SparseVector& u) {
  check_no_alias(&w, {&u, desc.mask.vector});
  if (w.size() != u.size()) fail(ErrCode::DimensionMismatch, "apply lengths disagree");
  if (f.uses_in && f.in != u.domain())
    fail(ErrCode::DomainMismatch, "apply operator input domain");
  check_out_domain(w.domain(), f.out, "apply");
  TmpVec T;
  T.idx = u.indices();
  T.vals.reserve(u.nvals());
  for (std::size_t p = 0; p < u.nvals(); ++p)
    T.vals.push_back(f.eval(u.values()[p], u.indices()[p], 0));
  post_step(w, std::move(T), desc);
}

void apply(SparseMatrix& C, const Descriptor& desc, const UnaryOp& f,
           const SparseMatrix& A) {
  check_no_alias(&C, {&A, desc.mask.matrix});
  if (C.nrows() != A.nrows() || C.ncols() != A.ncols())
    fail(ErrCode::DimensionMismatch, "apply shapes disagree");
  if (f.uses_in && f.in != A.domain())
    fail(ErrCode::DomainMismatch, "apply operator input domain");
  check_out_domain(C.domain(), f.out, "apply");
  TmpRows T(A.nrows());
  for (Index i = 0; i < A.nrows(); ++i) {
    auto cols = A.row_cols(i);
    auto vals = A.row_vals(i);
    T.idx[i].assign(cols.begin(), cols.end());
    T.vals[i].reserve(cols.size());
    for (std::size_t p = 0; p < cols.size(); ++p)
      T.vals[i].push_back(f.eval(vals[p], i, cols[p]));
  }
  post_step(C, std::move(T), desc);
}

void select(SparseVector& w, const Descriptor& desc, const SelectOp& pred,
            const SparseVector& u) {
  check_no_alias(&w, {&u, desc.mask.vector});
  if (w.size() != u.size()) fail(ErrCode::DimensionMismatch, "select lengths disagree");
  if (pred.in && *pred.in != u.domain())
    fail(ErrCode::DomainMismatch, "select predicate domain");
  check_out_domain(w.domain(), u.domain(), "select");
  TmpVec T;
  for (std::size_t p = 0; p < u.nvals(); ++p) {
    if (pred.pred(u.values()[p], u.indices()[p], 0)) {
      T.idx.push_back(u.indices()[p]);
      T.vals.push_back(u.values()[p]);
    }
  }
  post_step(w, std::move(T), desc);
}

void select(SparseMatrix& C, const Descriptor& desc, const SelectOp& pred,
            const SparseMatrix& A) {
  check_no_alias(&C, {&A, desc.mask.matrix});
  if (C.nrows() != A.nrows() || C.ncols() != A.ncols())
    fail(ErrCode::DimensionMismatch, "select shapes disagree");
  if (pred.in && *pred.in != A.domain())
    fail(ErrCode::DomainMismatch, "select predicate domain");
  check_out_domain(C.domain(), A.domain(), "select");
  TmpRows T(A.nrows());
  for (Index i = 0; i < A.nrows(); ++i) {
    auto cols = A.row_cols(i);
    auto vals = A.row_vals(i);
    for (std::size_t p = 0; p < cols.size(); ++p) {
      if (pred.pred(vals[p], i, cols[p])) {
        T.idx[i].push_back(cols[p]);
        T.vals[i].push_back(vals[p]);
      }
    }
  }
  post_step(C, std::move(T), desc);
}

// ---- reduce / transpose ---------------------------------------------------

void reduce_rows(SparseVector& w, const Descriptor& desc, const Monoid& monoid,
                 const SparseMatrix& A) {
  check_no_alias(&w, {&A, desc.mask.vector});
  SparseMatrix As;
  const SparseMatrix* ap = &A;
  if (desc.transpose_in1) {
    As = plain_transpose(A);
    ap = &As;
  }
  if (w.size() != ap->nrows()) fail(ErrCode::DimensionMismatch, "reduce output length");
  if (ap->domain() != domain_of(monoid.identity))
    fail(ErrCode::DomainMismatch, "reduce monoid domain");
  check_out_domain(w.domain(), domain_of(monoid.identity), "reduce");
  TmpVec T;
  for (Index i = 0; i < ap->nrows(); ++i) {
    auto cols = ap->row_cols(i);
    auto vals = ap->row_vals(i);
    if (cols.empty()) continue;
    Scalar acc = vals[0];
    for (std::size_t p = 1; p < cols.size(); ++p)
      acc = monoid.op(acc, vals[p], i, 0, cols[p]);
    T.idx.push_back(i);
    T.vals.push_back(acc);
  }
  post_step(w, std::move(T), desc);
}

namespace {

Scalar fold_all(const Monoid& monoid, std::span<const Scalar> vals) {
  if (vals.empty()) return monoid.identity;
  Scalar acc = vals[0];
  for (std::size_t p = 1; p < vals.size(); ++p) acc = monoid.op(acc, vals[p], 0, 0, 0);
  return acc;
}

Scalar finish_scalar(const Scalar& prior, const std::optional<BinaryOp>& accum,
                     const Monoid& monoid, const Scalar& total) {
  if (!accum) return total;
  check_accum(accum, domain_of(prior), domain_of(monoid.identity));
  return (*accum)(prior, total, 0, 0, 0);
}

}  // namespace

void reduce_scalar(Scalar& s, const std::optional<BinaryOp>& accum,
                   const Monoid& monoid, const SparseMatrix& A) {
  if (A.domain() != domain_of(monoid.identity))
    fail(ErrCode::DomainMismatch, "reduce monoid domain");
  s = finish_scalar(s, accum, monoid, fold_all(monoid, A.values()));
}

void reduce_scalar(Scalar& s, const std::optional<BinaryOp>& accum,
                   const Monoid& monoid, const SparseVector& u) {
  if (u.domain() != domain_of(monoid.identity))
    fail(ErrCode::DomainMismatch, "reduce monoid domain");
  s = finish_scalar(s, accum, monoid, fold_all(monoid, u.values()));
}

void transpose(SparseMatrix& C, const Descriptor& desc, const SparseMatrix& A) {
  check_no_alias(&C, {&A, desc.mask.matrix});
  SparseMatrix As;
  const SparseMatrix* ap = &A;
  if (desc.transpose_in1) {
    As = plain_transpose(A);
    ap = &As;
  }
  if (C.nrows() != ap->ncols() || C.ncols() != ap->nrows())
    fail(ErrCode::DimensionMismatch, "transpose output shape");
  check_out_domain(C.domain(), ap->domain(), "transpose");
  SparseMatrix At = plain_transpose(*ap);
  TmpRows T(At.nrows());
  for (Index i = 0; i < At.nrows(); ++i) {
    auto cols = At.row_cols(i);
    auto vals = At.row_vals(i);
    T.idx[i].assign(cols.begin(), cols.end());
    T.vals[i].assign(vals.begin(), vals.end());
  }
  post_step(C, std::move(T), desc);
}

}  // namespace gblite
