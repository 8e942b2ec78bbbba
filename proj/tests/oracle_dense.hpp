// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0
//
// Dense reference evaluator for the operation set. Structures are
// materialized as presence bitmaps and every operation applies its
// set-theoretic definition with plain loops; the shared mask/accumulator
// post-step is transcribed directly from its written rule. Test-only.

#pragma once

#include <optional>
#include <vector>

#include "gblite/containers.hpp"
#include "gblite/core.hpp"

namespace oracle {

using gblite::BinaryOp;
using gblite::Domain;
using gblite::Index;
using gblite::Monoid;
using gblite::Scalar;
using gblite::SelectOp;
using gblite::Semiring;
using gblite::SparseMatrix;
using gblite::SparseVector;
using gblite::UnaryOp;

struct DenseVec {
  Index n = 0;
  Domain dom = Domain::Bool;
  std::vector<char> present;
  std::vector<Scalar> val;

  DenseVec() = default;
  DenseVec(Index n_, Domain d) : n(n_), dom(d), present(n_, 0), val(n_) {}

  static DenseVec from(const SparseVector& v) {
    DenseVec d(v.size(), v.domain());
    for (std::size_t p = 0; p < v.nvals(); ++p) {
      d.present[v.indices()[p]] = 1;
      d.val[v.indices()[p]] = v.values()[p];
    }
    return d;
  }

  SparseVector to_sparse() const {
    SparseVector v(n, dom);
    std::vector<Index> idx;
    std::vector<Scalar> vals;
    for (Index i = 0; i < n; ++i)
      if (present[i]) {
        idx.push_back(i);
        vals.push_back(val[i]);
      }
    v.adopt(std::move(idx), std::move(vals));
    return v;
  }
};

struct DenseMat {
  Index nr = 0, nc = 0;
  Domain dom = Domain::Bool;
  std::vector<char> present;
  std::vector<Scalar> val;

  DenseMat() = default;
  DenseMat(Index r, Index c, Domain d)
      : nr(r), nc(c), dom(d), present(r * c, 0), val(r * c) {}

  std::size_t at(Index i, Index j) const { return i * nc + j; }

  static DenseMat from(const SparseMatrix& m) {
    DenseMat d(m.nrows(), m.ncols(), m.domain());
    for (Index i = 0; i < m.nrows(); ++i) {
      auto cols = m.row_cols(i);
      auto vals = m.row_vals(i);
      for (std::size_t p = 0; p < cols.size(); ++p) {
        d.present[d.at(i, cols[p])] = 1;
        d.val[d.at(i, cols[p])] = vals[p];
      }
    }
    return d;
  }

  SparseMatrix to_sparse() const {
    SparseMatrix m(nr, nc, dom);
    std::vector<Index> row_ptr(nr + 1, 0);
    std::vector<Index> col_idx;
    std::vector<Scalar> vals;
    for (Index i = 0; i < nr; ++i) {
      for (Index j = 0; j < nc; ++j)
        if (present[at(i, j)]) {
          col_idx.push_back(j);
          vals.push_back(val[at(i, j)]);
        }
      row_ptr[i + 1] = col_idx.size();
    }
    m.adopt(std::move(row_ptr), std::move(col_idx), std::move(vals));
    return m;
  }
};

// ---- mask + post-step -----------------------------------------------------

struct MaskView {
  const DenseMat* m = nullptr;
  const DenseVec* v = nullptr;
  bool complement = false;
  bool structural = false;
  bool replace = false;

  bool member(bool present, const Scalar& value) const {
    bool in = present && (structural || gblite::is_nonzero(value));
    return in != complement;
  }
  bool member_mat(Index i, Index j) const {
    if (!m) return true;
    return member(m->present[m->at(i, j)], m->val[m->at(i, j)]);
  }
  bool member_vec(Index i) const {
    if (!v) return true;
    return member(v->present[i], v->val[i]);
  }
};

// For each position p: outside the mask, replace deletes the prior entry and
// merge keeps it; inside the mask, accum(prior, T(p)) is written when both
// exist, T(p) when only T exists, else the prior entry is kept.
inline DenseMat post(const DenseMat& prior, const DenseMat& T, const MaskView& mask,
                     const std::optional<BinaryOp>& accum) {
  DenseMat out(prior.nr, prior.nc, prior.dom);
  for (Index i = 0; i < prior.nr; ++i) {
    for (Index j = 0; j < prior.nc; ++j) {
      std::size_t p = out.at(i, j);
      bool in_mask = mask.member_mat(i, j);
      if (!in_mask) {
        if (prior.present[p] && !mask.replace) {
          out.present[p] = 1;
          out.val[p] = prior.val[p];
        }
        continue;
      }
      if (T.present[p]) {
        out.present[p] = 1;
        out.val[p] = (accum && prior.present[p])
                         ? (*accum)(prior.val[p], T.val[p], i, 0, j)
                         : T.val[p];
      } else if (prior.present[p]) {
        out.present[p] = 1;
        out.val[p] = prior.val[p];
      }
    }
  }
  return out;
}

inline DenseVec post(const DenseVec& prior, const DenseVec& T, const MaskView& mask,
                     const std::optional<BinaryOp>& accum) {
  DenseVec out(prior.n, prior.dom);
  for (Index i = 0; i < prior.n; ++i) {
    bool in_mask = mask.member_vec(i);
    if (!in_mask) {
      if (prior.present[i] && !mask.replace) {
        out.present[i] = 1;
        out.val[i] = prior.val[i];
      }
      continue;
    }
    if (T.present[i]) {
      out.present[i] = 1;
      out.val[i] = (accum && prior.present[i])
                       ? (*accum)(prior.val[i], T.val[i], i, 0, 0)
                       : T.val[i];
    } else if (prior.present[i]) {
      out.present[i] = 1;
      out.val[i] = prior.val[i];
    }
  }
  return out;
}

// ---- operations (compute T only) ------------------------------------------

inline DenseMat transpose(const DenseMat& a) {
  DenseMat t(a.nc, a.nr, a.dom);
  for (Index i = 0; i < a.nr; ++i)
    for (Index j = 0; j < a.nc; ++j)
      if (a.present[a.at(i, j)]) {
        t.present[t.at(j, i)] = 1;
        t.val[t.at(j, i)] = a.val[a.at(i, j)];
      }
  return t;
}

inline DenseMat mxm(const Semiring& s, const DenseMat& a, const DenseMat& b) {
  DenseMat t(a.nr, b.nc, s.add.op.out);
  for (Index i = 0; i < a.nr; ++i) {
    for (Index j = 0; j < b.nc; ++j) {
      bool any = false;
      Scalar acc;
      for (Index k = 0; k < a.nc; ++k) {
        if (!a.present[a.at(i, k)] || !b.present[b.at(k, j)]) continue;
        Scalar v = s.mult(a.val[a.at(i, k)], b.val[b.at(k, j)], i, k, j);
        acc = any ? s.add.op(acc, v, i, k, j) : v;
        any = true;
      }
      if (any) {
        t.present[t.at(i, j)] = 1;
        t.val[t.at(i, j)] = acc;
      }
    }
  }
  return t;
}

inline DenseVec vxm(const Semiring& s, const DenseVec& u, const DenseMat& a) {
  DenseVec t(a.nc, s.add.op.out);
  for (Index j = 0; j < a.nc; ++j) {
    bool any = false;
    Scalar acc;
    for (Index k = 0; k < a.nr; ++k) {
      if (!u.present[k] || !a.present[a.at(k, j)]) continue;
      Scalar v = s.mult(u.val[k], a.val[a.at(k, j)], 0, k, j);
      acc = any ? s.add.op(acc, v, 0, k, j) : v;
      any = true;
    }
    if (any) {
      t.present[j] = 1;
      t.val[j] = acc;
    }
  }
  return t;
}

inline DenseVec mxv(const Semiring& s, const DenseMat& a, const DenseVec& u) {
  DenseVec t(a.nr, s.add.op.out);
  for (Index i = 0; i < a.nr; ++i) {
    bool any = false;
    Scalar acc;
    for (Index k = 0; k < a.nc; ++k) {
      if (!a.present[a.at(i, k)] || !u.present[k]) continue;
      Scalar v = s.mult(a.val[a.at(i, k)], u.val[k], i, k, 0);
      acc = any ? s.add.op(acc, v, i, k, 0) : v;
      any = true;
    }
    if (any) {
      t.present[i] = 1;
      t.val[i] = acc;
    }
  }
  return t;
}

inline DenseMat ewise_add(const BinaryOp& op, const DenseMat& a, const DenseMat& b) {
  DenseMat t(a.nr, a.nc, op.out);
  for (std::size_t p = 0; p < a.present.size(); ++p) {
    Index i = p / a.nc, j = p % a.nc;
    if (a.present[p] && b.present[p]) {
      t.present[p] = 1;
      t.val[p] = op(a.val[p], b.val[p], i, 0, j);
    } else if (a.present[p] || b.present[p]) {
      t.present[p] = 1;
      t.val[p] = a.present[p] ? a.val[p] : b.val[p];
    }
  }
  return t;
}

inline DenseVec ewise_add(const BinaryOp& op, const DenseVec& a, const DenseVec& b) {
  DenseVec t(a.n, op.out);
  for (Index i = 0; i < a.n; ++i) {
    if (a.present[i] && b.present[i]) {
      t.present[i] = 1;
      t.val[i] = op(a.val[i], b.val[i], i, 0, 0);
    } else if (a.present[i] || b.present[i]) {
      t.present[i] = 1;
      t.val[i] = a.present[i] ? a.val[i] : b.val[i];
    }
  }
  return t;
}

inline DenseMat ewise_mult(const BinaryOp& op, const DenseMat& a, const DenseMat& b) {
  DenseMat t(a.nr, a.nc, op.out);
  for (std::size_t p = 0; p < a.present.size(); ++p) {
    if (a.present[p] && b.present[p]) {
      t.present[p] = 1;
      t.val[p] = op(a.val[p], b.val[p], p / a.nc, 0, p % a.nc);
    }
  }
  return t;
}

inline DenseVec ewise_mult(const BinaryOp& op, const DenseVec& a, const DenseVec& b) {
  DenseVec t(a.n, op.out);
  for (Index i = 0; i < a.n; ++i) {
    if (a.present[i] && b.present[i]) {
      t.present[i] = 1;
      t.val[i] = op(a.val[i], b.val[i], i, 0, 0);
    }
  }
  return t;
}

inline DenseMat extract(const DenseMat& a, const std::vector<Index>& rows,
                        const std::vector<Index>& cols) {
  DenseMat t(rows.size(), cols.size(), a.dom);
  for (Index p = 0; p < rows.size(); ++p)
    for (Index q = 0; q < cols.size(); ++q)
      if (a.present[a.at(rows[p], cols[q])]) {
        t.present[t.at(p, q)] = 1;
        t.val[t.at(p, q)] = a.val[a.at(rows[p], cols[q])];
      }
  return t;
}

inline DenseVec extract_col(const DenseMat& a, const std::vector<Index>& rows,
                            Index col) {
  DenseVec t(rows.size(), a.dom);
  for (Index p = 0; p < rows.size(); ++p)
    if (a.present[a.at(rows[p], col)]) {
      t.present[p] = 1;
      t.val[p] = a.val[a.at(rows[p], col)];
    }
  return t;
}

inline DenseVec extract(const DenseVec& u, const std::vector<Index>& idx) {
  DenseVec t(idx.size(), u.dom);
  for (Index p = 0; p < idx.size(); ++p)
    if (u.present[idx[p]]) {
      t.present[p] = 1;
      t.val[p] = u.val[idx[p]];
    }
  return t;
}

// Scatter; duplicates combine through the accumulator when present,
// otherwise the later contribution wins.
inline DenseMat assign_T(const DenseMat& target, const std::vector<Index>& rows,
                         const std::vector<Index>& cols, const DenseMat& src,
                         const std::optional<BinaryOp>& accum) {
  DenseMat t(target.nr, target.nc, src.dom);
  for (Index p = 0; p < rows.size(); ++p)
    for (Index q = 0; q < cols.size(); ++q) {
      if (!src.present[src.at(p, q)]) continue;
      std::size_t pos = t.at(rows[p], cols[q]);
      const Scalar& v = src.val[src.at(p, q)];
      t.val[pos] = (t.present[pos] && accum)
                       ? (*accum)(t.val[pos], v, rows[p], 0, cols[q])
                       : v;
      t.present[pos] = 1;
    }
  return t;
}

inline DenseVec assign_T(const DenseVec& target, const std::vector<Index>& idx,
                         const DenseVec& src, const std::optional<BinaryOp>& accum) {
  DenseVec t(target.n, src.dom);
  for (Index p = 0; p < idx.size(); ++p) {
    if (!src.present[p]) continue;
    t.val[idx[p]] = (t.present[idx[p]] && accum)
                        ? (*accum)(t.val[idx[p]], src.val[p], idx[p], 0, 0)
                        : src.val[p];
    t.present[idx[p]] = 1;
  }
  return t;
}

inline DenseMat assign_T(const DenseMat& target, const std::vector<Index>& rows,
                         const std::vector<Index>& cols, const Scalar& s) {
  DenseMat t(target.nr, target.nc, gblite::domain_of(s));
  for (Index i : rows)
    for (Index j : cols) {
      t.present[t.at(i, j)] = 1;
      t.val[t.at(i, j)] = s;
    }
  return t;
}

inline DenseVec assign_T(const DenseVec& target, const std::vector<Index>& idx,
                         const Scalar& s) {
  DenseVec t(target.n, gblite::domain_of(s));
  for (Index i : idx) {
    t.present[i] = 1;
    t.val[i] = s;
  }
  return t;
}

inline DenseMat apply(const UnaryOp& f, const DenseMat& a) {
  DenseMat t(a.nr, a.nc, f.out);
  for (Index i = 0; i < a.nr; ++i)
    for (Index j = 0; j < a.nc; ++j)
      if (a.present[a.at(i, j)]) {
        t.present[t.at(i, j)] = 1;
        t.val[t.at(i, j)] = f.eval(a.val[a.at(i, j)], i, j);
      }
  return t;
}

inline DenseVec apply(const UnaryOp& f, const DenseVec& u) {
  DenseVec t(u.n, f.out);
  for (Index i = 0; i < u.n; ++i)
    if (u.present[i]) {
      t.present[i] = 1;
      t.val[i] = f.eval(u.val[i], i, 0);
    }
  return t;
}

inline DenseMat select(const SelectOp& pred, const DenseMat& a) {
  DenseMat t(a.nr, a.nc, a.dom);
  for (Index i = 0; i < a.nr; ++i)
    for (Index j = 0; j < a.nc; ++j)
      if (a.present[a.at(i, j)] && pred.pred(a.val[a.at(i, j)], i, j)) {
        t.present[t.at(i, j)] = 1;
        t.val[t.at(i, j)] = a.val[a.at(i, j)];
      }
  return t;
}

inline DenseVec select(const SelectOp& pred, const DenseVec& u) {
  DenseVec t(u.n, u.dom);
  for (Index i = 0; i < u.n; ++i)
    if (u.present[i] && pred.pred(u.val[i], i, 0)) {
      t.present[i] = 1;
      t.val[i] = u.val[i];
    }
  return t;
}

inline DenseVec reduce_rows(const Monoid& monoid, const DenseMat& a) {
  DenseVec t(a.nr, gblite::domain_of(monoid.identity));
  for (Index i = 0; i < a.nr; ++i) {
    bool any = false;
    Scalar acc;
    for (Index j = 0; j < a.nc; ++j) {
      if (!a.present[a.at(i, j)]) continue;
      acc = any ? monoid.op(acc, a.val[a.at(i, j)], i, 0, j) : a.val[a.at(i, j)];
      any = true;
    }
    if (any) {
      t.present[i] = 1;
      t.val[i] = acc;
    }
  }
  return t;
}

inline Scalar reduce_all(const Monoid& monoid, const DenseMat& a) {
  bool any = false;
  Scalar acc = monoid.identity;
  for (Index i = 0; i < a.nr; ++i)
    for (Index j = 0; j < a.nc; ++j) {
      if (!a.present[a.at(i, j)]) continue;
      acc = any ? monoid.op(acc, a.val[a.at(i, j)], 0, 0, 0) : a.val[a.at(i, j)];
      any = true;
    }
  return acc;
}

inline Scalar reduce_all(const Monoid& monoid, const DenseVec& u) {
  bool any = false;
  Scalar acc = monoid.identity;
  for (Index i = 0; i < u.n; ++i) {
    if (!u.present[i]) continue;
    acc = any ? monoid.op(acc, u.val[i], 0, 0, 0) : u.val[i];
    any = true;
  }
  return acc;
}

}  // namespace oracle
