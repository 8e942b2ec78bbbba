// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gblite/verify.hpp"
#include "test_helpers.hpp"

using namespace gblite;
using testutil::Rng;

namespace {

// Levels as reported by the algorithm, for comparing against the queue BFS.
std::vector<std::int64_t> levels_of(const algo::BfsResult& r, Index n) {
  std::vector<std::int64_t> out(n, -1);
  REQUIRE(r.level.has_value());
  for (std::size_t p = 0; p < r.level->nvals(); ++p)
    out[r.level->indices()[p]] =
        static_cast<std::int64_t>(as_uint64(r.level->values()[p]));
  return out;
}

}  // namespace

TEST_CASE("star graph: all leaves parent to the center") {
  auto g = graph_new(testutil::star(3), Kind::UndirectedAdjacency);
  auto r = algo::bfs_push(g, 0);
  CHECK(r.parent.nvals() == 4);
  for (Index v = 0; v < 4; ++v)
    CHECK(as_uint64(*r.parent.extract_element(v)) == 0);
  CHECK(!r.level.has_value());  // levels only on request
}

TEST_CASE("path graph parents and levels") {
  auto g = graph_new(testutil::path3_directed(), Kind::DirectedAdjacency);
  auto r = algo::bfs_push(g, 0, true);
  CHECK(as_uint64(*r.parent.extract_element(0)) == 0);
  CHECK(as_uint64(*r.parent.extract_element(1)) == 0);
  CHECK(as_uint64(*r.parent.extract_element(2)) == 1);
  CHECK(levels_of(r, 3) == std::vector<std::int64_t>{0, 1, 2});
}

TEST_CASE("isolated source yields a single-entry parent vector") {
  SparseMatrix empty(2, 2, Domain::Bool);
  auto g = graph_new(std::move(empty), Kind::DirectedAdjacency);
  auto r = algo::bfs_push(g, 1);
  CHECK(r.parent.nvals() == 1);
  CHECK(as_uint64(*r.parent.extract_element(1)) == 1);
}

TEST_CASE("source out of range raises") {
  auto g = graph_new(testutil::path3_directed(), Kind::DirectedAdjacency);
  CHECK_THROWS_AS(algo::bfs_push(g, 3), Error);
}

TEST_CASE("direction-optimizing advanced form demands the transpose cache") {
  auto g = graph_new(testutil::path3_directed(), Kind::DirectedAdjacency);
  try {
    algo::bfs_direction_optimizing(g, 0);
    FAIL("expected MissingProperty");
  } catch (const Error& e) {
    CHECK(e.code() == ErrCode::MissingProperty);
  }
  CHECK(!g.AT.has_value());  // no silent computation
}

TEST_CASE("basic wrapper computes the transpose then agrees with push") {
  auto g = graph_new(testutil::path3_directed(), Kind::DirectedAdjacency);
  algo::BfsConfig cfg;
  cfg.want_level = true;
  auto r = algo::basic::bfs_direction_optimizing(g, 0, cfg);
  CHECK(g.AT.has_value());
  CHECK(levels_of(r, 3) == std::vector<std::int64_t>{0, 1, 2});
}

TEST_CASE("forced pull equals forced push on the star graph") {
  auto g = graph_new(testutil::star(4), Kind::UndirectedAdjacency);
  property_at(g);
  algo::BfsConfig push_cfg, pull_cfg;
  push_cfg.direction = algo::BfsConfig::Direction::ForcePush;
  push_cfg.want_level = true;
  pull_cfg.direction = algo::BfsConfig::Direction::ForcePull;
  pull_cfg.want_level = true;
  auto a = algo::bfs_direction_optimizing(g, 2, push_cfg);
  auto b = algo::bfs_direction_optimizing(g, 2, pull_cfg);
  CHECK(levels_of(a, 5) == levels_of(b, 5));
  CHECK(util::is_equal(a.parent, b.parent));
}

TEST_CASE("random digraphs: parents valid, levels match the queue oracle") {
  Rng rng(101);
  for (int round = 0; round < 60; ++round) {
    Index n = std::uniform_int_distribution<Index>(1, 64)(rng);
    double density = std::uniform_real_distribution<double>(0.02, 0.2)(rng);
    auto g = graph_new(testutil::random_digraph(rng, n, density),
                       Kind::DirectedAdjacency);
    property_at(g);
    Index src = std::uniform_int_distribution<Index>(0, n - 1)(rng);

    auto push = algo::bfs_push(g, src, true);
    std::string why;
    CHECK_MESSAGE(verify::check_bfs_parents(g.A, src, push.parent, &why), why);
    auto want = verify::bfs_levels(g.A, src);
    CHECK(levels_of(push, n) == want);

    algo::BfsConfig cfg;
    cfg.want_level = true;
    auto dopt = algo::bfs_direction_optimizing(g, src, cfg);
    CHECK_MESSAGE(verify::check_bfs_parents(g.A, src, dopt.parent, &why), why);
    CHECK(levels_of(dopt, n) == want);

    // Same reached set for both variants.
    CHECK(push.parent.indices() == dopt.parent.indices());
  }
}

TEST_CASE("disconnected fixture reaches only its component") {
  // Two disjoint directed edges: 0->1, 2->3.
  SparseMatrix m(4, 4, Domain::Bool);
  m.set_element(0, 1, true);
  m.set_element(2, 3, true);
  auto g = graph_new(std::move(m), Kind::DirectedAdjacency);
  auto r = algo::bfs_push(g, 0, true);
  CHECK(r.parent.nvals() == 2);
  CHECK(r.parent.extract_element(2) == std::nullopt);
  CHECK(r.parent.extract_element(3) == std::nullopt);
}
