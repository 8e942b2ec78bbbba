// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#include "gblite/graph.hpp"

#include <sstream>

#include "gblite/util.hpp"

namespace gblite {

const char* kind_name(Kind k) {
  return k == Kind::DirectedAdjacency ? "directed" : "undirected";
}

Graph graph_new(SparseMatrix&& m, Kind kind) {
  try {
    m.validate();
  } catch (const Error& e) {
    fail(ErrCode::InvalidMatrix, std::string("graph_new: ") + e.what());
  }
  if (m.nrows() != m.ncols())
    fail(ErrCode::InvalidMatrix, "graph_new: adjacency matrix must be square");
  Graph g;
  g.A = std::move(m);
  g.kind = kind;
  return g;
}

void property_at(Graph& g) {
  g.A.validate();
  if (g.kind == Kind::UndirectedAdjacency) {
    // For undirected graphs the transpose equals A; store one copy of the
    // same content.
    g.AT = g.A;
    return;
  }
  SparseMatrix t(g.A.ncols(), g.A.nrows(), g.A.domain());
  transpose(t, Descriptor{}, g.A);
  g.AT = std::move(t);
}

namespace {

SparseVector degree_of(const SparseMatrix& m, bool by_row) {
  // Structural entry counts, independent of the value domain.
  Index n = by_row ? m.nrows() : m.ncols();
  std::vector<std::uint64_t> count(n, 0);
  if (by_row) {
    for (Index i = 0; i < m.nrows(); ++i)
      count[i] = m.row_ptr()[i + 1] - m.row_ptr()[i];
  } else {
    for (Index j : m.col_idx()) ++count[j];
  }
  SparseVector d(n, Domain::Uint64);
  std::vector<Index> idx;
  std::vector<Scalar> vals;
  for (Index i = 0; i < n; ++i) {
    if (count[i] > 0) {
      idx.push_back(i);
      vals.push_back(count[i]);
    }
  }
  d.adopt(std::move(idx), std::move(vals));
  return d;
}

}  // namespace

void property_rowdegree(Graph& g) {
  g.A.validate();
  g.row_degree = degree_of(g.A, true);
}

void property_coldegree(Graph& g) {
  g.A.validate();
  g.col_degree = degree_of(g.A, false);
}

void property_symmetric_pattern(Graph& g) {
  g.A.validate();
  const SparseMatrix* t = nullptr;
  SparseMatrix local;
  if (g.AT) {
    t = &*g.AT;
  } else {
    local = SparseMatrix(g.A.ncols(), g.A.nrows(), g.A.domain());
    transpose(local, Descriptor{}, g.A);
    t = &local;
  }
  bool sym = g.A.nrows() == t->nrows() && g.A.row_ptr() == t->row_ptr() &&
             g.A.col_idx() == t->col_idx();
  g.pattern_is_symmetric = sym ? TriState::True : TriState::False;
}

void property_ndiag(Graph& g) {
  g.A.validate();
  std::int64_t count = 0;
  for (Index i = 0; i < g.A.nrows(); ++i)
    if (g.A.extract_element(i, i)) ++count;
  g.ndiag = count;
}

void delete_properties(Graph& g) {
  g.AT.reset();
  g.row_degree.reset();
  g.col_degree.reset();
  g.pattern_is_symmetric = TriState::Unknown;
  g.ndiag = -1;
}

Status check_graph(const Graph& g) {
  try {
    g.A.validate();
  } catch (const Error& e) {
    return Status::error(ErrCode::InvalidGraph, std::string("A: ") + e.what());
  }
  if (g.A.nrows() != g.A.ncols())
    return Status::error(ErrCode::InvalidGraph, "A is not square");

  SparseMatrix t(g.A.ncols(), g.A.nrows(), g.A.domain());
  transpose(t, Descriptor{}, g.A);

  if (g.AT) {
    try {
      g.AT->validate();
    } catch (const Error& e) {
      return Status::error(ErrCode::InvalidGraph, std::string("AT: ") + e.what());
    }
    if (!util::is_equal(*g.AT, t))
      return Status::error(ErrCode::InvalidGraph, "AT does not equal transpose(A)");
  }

  auto check_degree = [&](const SparseVector& d, bool by_row,
                          const char* name) -> std::optional<Status> {
    if (d.size() != g.A.nrows())
      return Status::error(ErrCode::InvalidGraph, std::string(name) + " has wrong length");
    const SparseMatrix& m = by_row ? g.A : t;
    std::size_t cursor = 0;
    for (Index i = 0; i < m.nrows(); ++i) {
      Index cnt = m.row_ptr()[i + 1] - m.row_ptr()[i];
      bool present = cursor < d.nvals() && d.indices()[cursor] == i;
      if (cnt == 0) {
        if (present)
          return Status::error(ErrCode::InvalidGraph,
                               std::string(name) + " has an entry for an empty row");
        continue;
      }
      if (!present || domain_of(d.values()[cursor]) != Domain::Uint64 ||
          as_uint64(d.values()[cursor]) != cnt)
        return Status::error(ErrCode::InvalidGraph,
                             std::string(name) + " disagrees with A at node " +
                                 std::to_string(i));
      ++cursor;
    }
    if (cursor != d.nvals())
      return Status::error(ErrCode::InvalidGraph,
                           std::string(name) + " has extra entries");
    return std::nullopt;
  };

  if (g.row_degree)
    if (auto bad = check_degree(*g.row_degree, true, "row_degree")) return *bad;
  if (g.col_degree)
    if (auto bad = check_degree(*g.col_degree, false, "col_degree")) return *bad;

  bool actually_symmetric =
      g.A.row_ptr() == t.row_ptr() && g.A.col_idx() == t.col_idx();
  if (g.kind == Kind::UndirectedAdjacency && !actually_symmetric)
    return Status::error(ErrCode::InvalidGraph,
                         "undirected graph with an asymmetric pattern");
  if (g.pattern_is_symmetric == TriState::True && !actually_symmetric)
    return Status::error(ErrCode::InvalidGraph,
                         "pattern_is_symmetric is TRUE but A is asymmetric");
  if (g.pattern_is_symmetric == TriState::False && actually_symmetric)
    return Status::error(ErrCode::InvalidGraph,
                         "pattern_is_symmetric is FALSE but A is symmetric");

  if (g.ndiag != -1) {
    std::int64_t count = 0;
    for (Index i = 0; i < g.A.nrows(); ++i)
      if (g.A.extract_element(i, i)) ++count;
    if (count != g.ndiag)
      return Status::error(ErrCode::InvalidGraph, "ndiag disagrees with A");
  }
  return Status::success();
}

std::string display_graph(const Graph& g, int verbosity) {
  std::ostringstream out;
  out << "graph: " << g.A.nrows() << " x " << g.A.ncols() << ", " << g.A.nvals()
      << " entries, " << kind_name(g.kind) << ", domain "
      << domain_name(g.A.domain());
  if (verbosity <= 0) return out.str();

  out << "\n  caches:";
  out << " AT=" << (g.AT ? "yes" : "no");
  out << " row_degree=" << (g.row_degree ? "yes" : "no");
  out << " col_degree=" << (g.col_degree ? "yes" : "no");
  out << " symmetric="
      << (g.pattern_is_symmetric == TriState::Unknown
              ? "unknown"
              : (g.pattern_is_symmetric == TriState::True ? "true" : "false"));
  out << " ndiag=";
  if (g.ndiag < 0)
    out << "unknown";
  else
    out << g.ndiag;

  if (verbosity >= 2 && g.A.nvals() <= 100) {
    for (Index i = 0; i < g.A.nrows(); ++i) {
      auto cols = g.A.row_cols(i);
      auto vals = g.A.row_vals(i);
      for (std::size_t p = 0; p < cols.size(); ++p)
        out << "\n  (" << i << ", " << cols[p] << ") = "
            << scalar_to_string(vals[p]);
    }
  }
  return out.str();
}

}  // namespace gblite
