// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#include "gblite/verify.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace gblite::verify {

std::vector<std::int64_t> bfs_levels(const SparseMatrix& A, Index source) {
  std::vector<std::int64_t> level(A.nrows(), -1);
  std::queue<Index> q;
  level[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Index u = q.front();
    q.pop();
    for (Index v : A.row_cols(u)) {
      if (level[v] == -1) {
        level[v] = level[u] + 1;
        q.push(v);
      }
    }
  }
  return level;
}

bool check_bfs_parents(const SparseMatrix& A, Index source,
                       const SparseVector& parent, std::string* why) {
  auto level = bfs_levels(A, source);
  auto fail_with = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };

  std::vector<char> has_parent(A.nrows(), 0);
  for (std::size_t p = 0; p < parent.nvals(); ++p) {
    Index v = parent.indices()[p];
    Index par = as_uint64(parent.values()[p]);
    has_parent[v] = 1;
    if (v == source) {
      if (par != source) return fail_with("parent(source) is not source");
      continue;
    }
    if (level[v] == -1)
      return fail_with("node " + std::to_string(v) + " is not reachable");
    if (par >= A.nrows())
      return fail_with("parent id out of range at node " + std::to_string(v));
    auto row = A.row_cols(par);
    if (!std::binary_search(row.begin(), row.end(), v))
      return fail_with("missing edge " + std::to_string(par) + "->" +
                       std::to_string(v));
    if (level[par] + 1 != level[v])
      return fail_with("parent of " + std::to_string(v) +
                       " is not one level above");
  }
  for (Index v = 0; v < A.nrows(); ++v) {
    bool reachable = level[v] != -1;
    if (reachable != static_cast<bool>(has_parent[v]))
      return fail_with("reached set differs at node " + std::to_string(v));
  }
  return true;
}

std::vector<double> brandes(const SparseMatrix& A, std::span<const Index> sources) {
  Index n = A.nrows();
  std::vector<double> centrality(n, 0.0);
  std::vector<std::vector<Index>> predecessors(n);
  for (Index s : sources) {
    std::vector<double> sigma(n, 0.0);
    std::vector<std::int64_t> dist(n, -1);
    std::vector<double> delta(n, 0.0);
    for (auto& p : predecessors) p.clear();
    std::vector<Index> order;

    sigma[s] = 1.0;
    dist[s] = 0;
    std::queue<Index> q;
    q.push(s);
    while (!q.empty()) {
      Index u = q.front();
      q.pop();
      order.push_back(u);
      for (Index v : A.row_cols(u)) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
        if (dist[v] == dist[u] + 1) {
          sigma[v] += sigma[u];
          predecessors[v].push_back(u);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Index w = *it;
      for (Index u : predecessors[w])
        delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
      if (w != s) centrality[w] += delta[w];
    }
  }
  return centrality;
}

std::vector<std::vector<double>> pagerank_iterates(const SparseMatrix& A,
                                                   double damping,
                                                   int iterations) {
  Index n = A.nrows();
  std::vector<std::vector<double>> iterates;
  if (n == 0) return iterates;
  std::vector<double> outdeg(n, 0.0);
  for (Index i = 0; i < n; ++i)
    outdeg[i] = static_cast<double>(A.row_ptr()[i + 1] - A.row_ptr()[i]);

  double teleport = (1.0 - damping) / static_cast<double>(n);
  std::vector<double> rank(n, 1.0 / static_cast<double>(n));
  for (int k = 0; k < iterations; ++k) {
    std::vector<double> next(n, teleport);
    // Gather along incoming edges in ascending source order per target.
    std::vector<double> contrib(n, 0.0);
    for (Index u = 0; u < n; ++u)
      if (outdeg[u] > 0) contrib[u] = damping * rank[u] / outdeg[u];
    for (Index u = 0; u < n; ++u)
      for (Index v : A.row_cols(u)) next[v] += contrib[u];
    rank = next;
    iterates.push_back(rank);
  }
  return iterates;
}

std::vector<double> dijkstra(const SparseMatrix& A, Index source) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(A.nrows(), inf);
  dist[source] = 0.0;
  using Item = std::pair<double, Index>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    auto cols = A.row_cols(u);
    auto vals = A.row_vals(u);
    for (std::size_t p = 0; p < cols.size(); ++p) {
      double cand = dist[u] + as_fp64(vals[p]);
      if (cand < dist[cols[p]]) {
        dist[cols[p]] = cand;
        heap.emplace(cand, cols[p]);
      }
    }
  }
  return dist;
}

std::uint64_t count_triangles(const SparseMatrix& A) {
  std::uint64_t count = 0;
  for (Index i = 0; i < A.nrows(); ++i) {
    auto nbrs = A.row_cols(i);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      if (nbrs[a] <= i) continue;
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        auto row = A.row_cols(nbrs[a]);
        if (std::binary_search(row.begin(), row.end(), nbrs[b])) ++count;
      }
    }
  }
  return count;
}

namespace {

struct UnionFind {
  explicit UnionFind(Index n) : up(n) {
    for (Index i = 0; i < n; ++i) up[i] = i;
  }
  Index find(Index x) {
    while (up[x] != x) {
      up[x] = up[up[x]];
      x = up[x];
    }
    return x;
  }
  void unite(Index a, Index b) { up[find(a)] = find(b); }
  std::vector<Index> up;
};

}  // namespace

std::vector<std::uint64_t> components(const SparseMatrix& A) {
  Index n = A.nrows();
  UnionFind uf(n);
  for (Index i = 0; i < n; ++i)
    for (Index j : A.row_cols(i)) uf.unite(i, j);
  std::vector<std::uint64_t> min_id(n, std::numeric_limits<std::uint64_t>::max());
  for (Index i = 0; i < n; ++i) {
    Index r = uf.find(i);
    min_id[r] = std::min<std::uint64_t>(min_id[r], i);
  }
  std::vector<std::uint64_t> label(n);
  for (Index i = 0; i < n; ++i) label[i] = min_id[uf.find(i)];
  return label;
}

}  // namespace gblite::verify
