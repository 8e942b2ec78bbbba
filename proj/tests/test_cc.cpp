// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gblite/verify.hpp"
#include "test_helpers.hpp"

using namespace gblite;
using testutil::Rng;

TEST_CASE("two disjoint edges label by component minima") {
  SparseMatrix m(4, 4, Domain::Bool);
  m.set_element(0, 1, true);
  m.set_element(1, 0, true);
  m.set_element(2, 3, true);
  m.set_element(3, 2, true);
  auto g = graph_new(std::move(m), Kind::UndirectedAdjacency);
  auto r = algo::connected_components_fastsv(g);
  CHECK(r.label == std::vector<std::uint64_t>{0, 0, 2, 2});
}

TEST_CASE("a path is one component") {
  SparseMatrix m(5, 5, Domain::Bool);
  for (Index i = 0; i + 1 < 5; ++i) {
    m.set_element(i, i + 1, true);
    m.set_element(i + 1, i, true);
  }
  auto g = graph_new(std::move(m), Kind::UndirectedAdjacency);
  auto r = algo::connected_components_fastsv(g);
  CHECK(r.label == std::vector<std::uint64_t>(5, 0));
}

TEST_CASE("isolated nodes keep their own label") {
  SparseMatrix m(3, 3, Domain::Bool);
  auto g = graph_new(std::move(m), Kind::UndirectedAdjacency);
  auto r = algo::connected_components_fastsv(g);
  CHECK(r.label == std::vector<std::uint64_t>{0, 1, 2});
}

TEST_CASE("random graphs match union-find, with monotone parent updates") {
  Rng rng(601);
  for (int round = 0; round < 50; ++round) {
    Index n = std::uniform_int_distribution<Index>(1, 128)(rng);
    double density = std::uniform_real_distribution<double>(0.005, 0.08)(rng);
    auto g = graph_new(testutil::random_undirected(rng, n, density),
                       Kind::UndirectedAdjacency);
    std::vector<std::vector<std::uint64_t>> trace;
    auto r = algo::connected_components_fastsv(g, &trace);
    CHECK(r.label == verify::components(g.A));

    // f never increases at any index across iterations.
    std::vector<std::uint64_t> prev(n);
    for (Index i = 0; i < n; ++i) prev[i] = i;
    for (const auto& snapshot : trace) {
      for (Index i = 0; i < n; ++i) {
        CHECK(snapshot[i] <= prev[i]);
      }
      prev = snapshot;
    }
  }
}

TEST_CASE("labels are idempotent under a second run") {
  Rng rng(607);
  auto g = graph_new(testutil::random_undirected(rng, 60, 0.04),
                     Kind::UndirectedAdjacency);
  auto first = algo::connected_components_fastsv(g);
  auto second = algo::connected_components_fastsv(g);
  CHECK(first.label == second.label);
}

TEST_CASE("advanced form demands symmetry knowledge on directed kinds") {
  auto g = graph_new(testutil::path3_undirected(), Kind::DirectedAdjacency);
  try {
    algo::connected_components_fastsv(g);
    FAIL("expected MissingProperty");
  } catch (const Error& e) {
    CHECK(e.code() == ErrCode::MissingProperty);
  }
  property_symmetric_pattern(g);
  auto r = algo::connected_components_fastsv(g);
  CHECK(r.label == std::vector<std::uint64_t>{0, 0, 0});

  auto bad = graph_new(testutil::path3_directed(), Kind::DirectedAdjacency);
  property_symmetric_pattern(bad);
  try {
    algo::connected_components_fastsv(bad);
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrCode::PreconditionViolated);
  }
}

TEST_CASE("basic wrapper computes the symmetry property") {
  auto g = graph_new(testutil::path3_undirected(), Kind::DirectedAdjacency);
  auto r = algo::basic::connected_components_fastsv(g);
  CHECK(g.pattern_is_symmetric == TriState::True);
  CHECK(r.label == std::vector<std::uint64_t>{0, 0, 0});
}
