// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gblite/containers.hpp"

namespace gblite {

struct Graph;

namespace util {

struct DegreeSample {
  double mean = 0.0;
  double median = 0.0;
  Index sample_size = 0;
};

// Permutation p of 0..n-1 with degree(p[k]) monotone; ties keep ascending
// node order. Requires the row (or column) degree property on the graph.
std::vector<Index> sort_by_degree(const Graph& g, bool ascending, bool by_row);

// Mean and median of a seeded uniform degree sample (with replacement).
// A sample_size >= n uses every node once, making the values exact. The
// median of an even-length sample is the lower middle element.
DegreeSample sample_degree(const Graph& g, Index sample_size, std::uint64_t seed);

inline constexpr Index kDefaultSampleSize = 1024;

// Boolean matrix with the structure of A and every value true.
SparseMatrix pattern(const SparseMatrix& A);

// Same dimensions, domain, structure, and values. Mismatched shapes give
// false, not an error.
bool is_equal(const SparseMatrix& A, const SparseMatrix& B);
bool is_equal(const SparseVector& a, const SparseVector& b);

// Same structure, and cmp true on every aligned pair of values.
bool is_all(const SparseMatrix& A, const SparseMatrix& B, const BinaryOp& cmp);
bool is_all(const SparseVector& a, const SparseVector& b, const BinaryOp& cmp);

// Stable tandem sort: reorders all arrays by the lexicographic key
// (k1[, k2[, k3]]).
void sort_arrays(std::vector<std::int64_t>& k1,
                 std::vector<std::int64_t>* k2 = nullptr,
                 std::vector<std::int64_t>* k3 = nullptr);

// Monotonic wall clock in seconds.
double timer();

}  // namespace util

}  // namespace gblite
