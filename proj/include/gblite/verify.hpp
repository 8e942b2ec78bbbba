// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gblite/algorithms.hpp"
#include "gblite/containers.hpp"

// Reference checkers, written against the plain CSR arrays with textbook
// algorithms. They share no code with the operation kernels they vet.
namespace gblite::verify {

// Queue BFS over the structure; -1 marks unreached nodes.
std::vector<std::int64_t> bfs_levels(const SparseMatrix& A, Index source);

// Validates a parents BFS tree: parent(source) = source, every tree edge
// exists, parents sit exactly one level above their children, and the
// reached set matches the queue BFS. Fills `why` on failure.
bool check_bfs_parents(const SparseMatrix& A, Index source,
                       const SparseVector& parent, std::string* why);

// Brandes betweenness centrality accumulated over the given sources.
std::vector<double> brandes(const SparseMatrix& A, std::span<const Index> sources);

// Dense GAP-style PageRank recurrence; one entry per iteration.
std::vector<std::vector<double>> pagerank_iterates(const SparseMatrix& A,
                                                   double damping, int iterations);

// Binary-heap Dijkstra; +inf marks unreached nodes.
std::vector<double> dijkstra(const SparseMatrix& A, Index source);

// Brute-force unique-3-clique count (undirected, loop-free).
std::uint64_t count_triangles(const SparseMatrix& A);

// Union-find labels normalized to the minimum node id per component.
std::vector<std::uint64_t> components(const SparseMatrix& A);

}  // namespace gblite::verify
