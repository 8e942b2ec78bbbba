// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "test_helpers.hpp"

using namespace gblite;
using testutil::Rng;

TEST_CASE("sort_by_degree: star leaves come before the hub") {
  auto g = graph_new(testutil::star(3), Kind::UndirectedAdjacency);
  property_rowdegree(g);
  auto p = util::sort_by_degree(g, true, true);
  CHECK(p == std::vector<Index>{1, 2, 3, 0});
}

TEST_CASE("sort_by_degree: regular graphs keep identity order") {
  auto g = graph_new(testutil::cycle(5, true), Kind::UndirectedAdjacency);
  property_rowdegree(g);
  auto p = util::sort_by_degree(g, true, true);
  CHECK(p == std::vector<Index>{0, 1, 2, 3, 4});
}

TEST_CASE("sort_by_degree yields a monotone degree sequence") {
  Rng rng(53);
  auto g = graph_new(testutil::random_digraph(rng, 20, 0.2),
                     Kind::DirectedAdjacency);
  property_rowdegree(g);
  auto p = util::sort_by_degree(g, true, true);
  // bijection
  auto sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (Index i = 0; i < 20; ++i) CHECK(sorted[i] == i);
  auto degree = [&](Index v) {
    auto e = g.row_degree->extract_element(v);
    return e ? as_uint64(*e) : 0;
  };
  for (Index k = 1; k < p.size(); ++k) CHECK(degree(p[k - 1]) <= degree(p[k]));

  auto desc = util::sort_by_degree(g, false, true);
  for (Index k = 1; k < desc.size(); ++k)
    CHECK(degree(desc[k - 1]) >= degree(desc[k]));
}

TEST_CASE("sort_by_degree requires the degree property") {
  auto g = graph_new(testutil::star(3), Kind::UndirectedAdjacency);
  CHECK_THROWS_AS(util::sort_by_degree(g, true, true), Error);
}

TEST_CASE("sample_degree: full samples are exact") {
  auto k3 = graph_new(testutil::complete(3), Kind::UndirectedAdjacency);
  property_rowdegree(k3);
  auto s = util::sample_degree(k3, 3, 1);
  CHECK(s.mean == doctest::Approx(2.0));
  CHECK(s.median == doctest::Approx(2.0));

  auto st = graph_new(testutil::star(3), Kind::UndirectedAdjacency);
  property_rowdegree(st);
  auto t = util::sample_degree(st, 4, 1);
  CHECK(t.mean == doctest::Approx(1.5));
  CHECK(t.median == doctest::Approx(1.0));  // lower middle of {1,1,1,3}
}

TEST_CASE("sample_degree is deterministic for a fixed seed") {
  Rng rng(59);
  auto g = graph_new(testutil::random_digraph(rng, 40, 0.15),
                     Kind::DirectedAdjacency);
  property_rowdegree(g);
  auto a = util::sample_degree(g, 10, 1234);
  auto b = util::sample_degree(g, 10, 1234);
  CHECK(a.mean == b.mean);
  CHECK(a.median == b.median);
  CHECK(a.sample_size == 10);
}

TEST_CASE("pattern strips values") {
  Rng rng(61);
  auto A = testutil::random_matrix(rng, 6, 6, 0.4, Domain::Fp64);
  auto P = util::pattern(A);
  CHECK(P.domain() == Domain::Bool);
  CHECK(P.row_ptr() == A.row_ptr());
  CHECK(P.col_idx() == A.col_idx());
  for (const auto& v : P.values()) CHECK(as_bool(v));
}

TEST_CASE("is_equal and is_all") {
  Rng rng(67);
  auto A = testutil::random_matrix(rng, 5, 5, 0.5, Domain::Int64);
  CHECK(util::is_equal(A, A));
  CHECK(util::is_equal(A.dup(), A));

  // 2A with positive entries is strictly greater.
  SparseMatrix Apos(5, 5, Domain::Int64);
  apply(Apos, Descriptor{}, ops::abs(Domain::Int64), A);
  UnaryOp bump;
  bump.eval = [](const Scalar& x, Index, Index) -> Scalar {
    return as_int64(x) + 1;
  };
  bump.in = bump.out = Domain::Int64;
  bump.name = "bump";
  SparseMatrix Ap1(5, 5, Domain::Int64);
  apply(Ap1, Descriptor{}, bump, Apos);
  SparseMatrix A2(5, 5, Domain::Int64);
  ewise_add(A2, Descriptor{}, ops::plus(Domain::Int64), Ap1, Ap1);
  CHECK(util::is_all(Ap1, A2, ops::lt(Domain::Int64)));
  CHECK(!util::is_equal(Ap1, A2));

  // Pattern mismatch is false, and shape mismatch is false rather than an error.
  SparseMatrix other(5, 5, Domain::Int64);
  CHECK(!util::is_all(Ap1, other, ops::lt(Domain::Int64)));
  SparseMatrix shaped(4, 5, Domain::Int64);
  CHECK(!util::is_equal(shaped, Ap1));
}

TEST_CASE("tandem sort orders lexicographically and stays stable") {
  std::vector<std::int64_t> k1 = {2, 1};
  std::vector<std::int64_t> k2 = {9, 9};
  util::sort_arrays(k1, &k2);
  CHECK(k1 == std::vector<std::int64_t>{1, 2});
  CHECK(k2 == std::vector<std::int64_t>{9, 9});

  // Stability: equal keys preserve input order of the payload array.
  std::vector<std::int64_t> keys = {5, 5, 5, 5};
  std::vector<std::int64_t> payload = {0, 1, 2, 3};
  util::sort_arrays(keys, &payload);
  CHECK(payload == std::vector<std::int64_t>{0, 1, 2, 3});

  std::vector<std::int64_t> bad = {1};
  std::vector<std::int64_t> wrong = {1, 2};
  CHECK_THROWS_AS(util::sort_arrays(bad, &wrong), Error);
}

TEST_CASE("tandem sort matches a reference sort on random data") {
  Rng rng(71);
  std::uniform_int_distribution<std::int64_t> v(-5, 5);
  for (int round = 0; round < 20; ++round) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(0, 40)(rng);
    std::vector<std::int64_t> k1(n), k2(n), k3(n);
    for (std::size_t i = 0; i < n; ++i) {
      k1[i] = v(rng);
      k2[i] = v(rng);
      k3[i] = v(rng);
    }
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> ref(n);
    for (std::size_t i = 0; i < n; ++i) ref[i] = {k1[i], k2[i], k3[i]};
    std::stable_sort(ref.begin(), ref.end());
    util::sort_arrays(k1, &k2, &k3);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::get<0>(ref[i]) == k1[i]);
      CHECK(std::get<1>(ref[i]) == k2[i]);
      CHECK(std::get<2>(ref[i]) == k3[i]);
    }
  }
}

TEST_CASE("timer is monotonic with sub-millisecond resolution") {
  double a = util::timer();
  double b = util::timer();
  CHECK(b >= a);
  // Two immediate calls land well within a millisecond of each other.
  CHECK(b - a < 1e-3);
}
