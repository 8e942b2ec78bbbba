// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gblite/containers.hpp"
#include "gblite/core.hpp"

namespace gblite {

enum class Kind {
  DirectedAdjacency,
  UndirectedAdjacency,
};

const char* kind_name(Kind k);

enum class TriState { False, True, Unknown };

// Non-opaque graph: a square adjacency matrix plus cached properties. Any
// code may read or write the fields directly; the convention is that caches
// are either absent/Unknown or consistent with A. check_graph() audits that.
struct Graph {
  SparseMatrix A;
  Kind kind = Kind::DirectedAdjacency;

  // cached properties
  std::optional<SparseMatrix> AT;          // transpose of A
  std::optional<SparseVector> row_degree;  // entry count per non-empty row (Uint64)
  std::optional<SparseVector> col_degree;  // entry count per non-empty column
  TriState pattern_is_symmetric = TriState::Unknown;
  std::int64_t ndiag = -1;                 // # diagonal entries, -1 if unknown

  Index n() const { return A.nrows(); }
};

// Takes ownership of the matrix (move); the caller's handle is left empty.
// All caches start unknown.
Graph graph_new(SparseMatrix&& m, Kind kind);

void property_at(Graph& g);
void property_rowdegree(Graph& g);
void property_coldegree(Graph& g);
void property_symmetric_pattern(Graph& g);
void property_ndiag(Graph& g);

// Clears every cache; A and kind are untouched.
void delete_properties(Graph& g);

// Success iff every graph invariant holds; the message names the first
// violated one.
Status check_graph(const Graph& g);

// Human-readable summary. Verbosity 0 is a single line, 1 adds cache status,
// 2 also lists entries for graphs with at most 100 of them.
std::string display_graph(const Graph& g, int verbosity = 0);

}  // namespace gblite
