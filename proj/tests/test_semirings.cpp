// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_helpers.hpp"

using namespace gblite;
using testutil::Rng;

TEST_CASE("registry holds exactly the six built-in semirings") {
  const auto& table = ops::registry();
  CHECK(table.size() == 6);
  CHECK(table.count("plus-times") == 1);
  CHECK(table.count("any-secondi") == 1);
  CHECK(table.count("min-plus") == 1);
  CHECK(table.count("plus-first") == 1);
  CHECK(table.count("plus-second") == 1);
  CHECK(table.count("plus-pair") == 1);

  CHECK(table.at("plus-times").add.op.out == Domain::Uint64);
  CHECK(table.at("min-plus").add.op.out == Domain::Fp64);
  CHECK(as_fp64(table.at("min-plus").add.identity) ==
        std::numeric_limits<double>::infinity());
  CHECK(ops::lookup("plus-pair").mult.name == "pair");
  CHECK_THROWS_AS(ops::lookup("times-plus"), Error);
}

TEST_CASE("every registry monoid passes identity and associativity sampling") {
  Rng rng(17);
  for (const auto& [name, semiring] : ops::registry()) {
    CAPTURE(name);
    const Monoid& m = semiring.add;
    Domain d = domain_of(m.identity);
    for (int round = 0; round < 100; ++round) {
      Scalar x = testutil::random_value(rng, d);
      Scalar y = testutil::random_value(rng, d);
      Scalar z = testutil::random_value(rng, d);
      CHECK(scalar_eq(m.op(m.identity, x), x));
      CHECK(scalar_eq(m.op(x, m.identity), x));
      CHECK(scalar_eq(m.op(x, m.op(y, z)), m.op(m.op(x, y), z)));
    }
  }
}

TEST_CASE("secondi law: vxm parents name a real frontier edge") {
  Rng rng(31);
  auto semiring = ops::any_secondi();
  for (int round = 0; round < 100; ++round) {
    Index n = std::uniform_int_distribution<Index>(1, 10)(rng);
    auto A = testutil::random_matrix(rng, n, n, 0.3, Domain::Uint64);
    auto u = testutil::random_vector(rng, n, 0.4, Domain::Uint64);
    SparseVector w(n, Domain::Uint64);
    vxm(w, Descriptor{}, semiring, u, A);
    for (std::size_t p = 0; p < w.nvals(); ++p) {
      Index j = w.indices()[p];
      Index k = as_uint64(w.values()[p]);
      CHECK(u.extract_element(k).has_value());
      CHECK(A.extract_element(k, j).has_value());
    }
  }
}

TEST_CASE("positional and pair multiplies ignore input domains") {
  // A bool adjacency under any-secondi with a uint frontier is the BFS shape.
  auto A = testutil::path3_directed();  // Bool
  SparseVector q(3, Domain::Uint64);
  q.set_element(0, std::uint64_t{0});
  SparseVector w(3, Domain::Uint64);
  vxm(w, Descriptor{}, ops::any_secondi(), q, A);
  CHECK(w.nvals() == 1);
  CHECK(as_uint64(*w.extract_element(1)) == 0);

  SparseMatrix C(3, 3, Domain::Uint64);
  mxm(C, Descriptor{}, ops::plus_pair(Domain::Uint64), A, A);
  CHECK(as_uint64(*C.extract_element(0, 2)) == 1);
}

TEST_CASE("any keeps the first contribution in ascending inner order") {
  // Node 2 is reachable from both 0 and 1; the parent must be 0.
  SparseMatrix A(3, 3, Domain::Bool);
  A.set_element(0, 2, true);
  A.set_element(1, 2, true);
  SparseVector q(3, Domain::Uint64);
  q.set_element(0, std::uint64_t{0});
  q.set_element(1, std::uint64_t{1});
  SparseVector w(3, Domain::Uint64);
  vxm(w, Descriptor{}, ops::any_secondi(), q, A);
  CHECK(as_uint64(*w.extract_element(2)) == 0);
}

TEST_CASE("min-plus treats absent entries as +infinity") {
  // Relaxing over an empty row changes nothing.
  SparseMatrix A(2, 2, Domain::Fp64);
  A.set_element(0, 1, 3.0);
  SparseVector t(2, Domain::Fp64);
  t.set_element(0, 1.0);
  SparseVector w(2, Domain::Fp64);
  vxm(w, Descriptor{}, ops::min_plus(Domain::Fp64), t, A);
  CHECK(w.nvals() == 1);
  CHECK(as_fp64(*w.extract_element(1)) == 4.0);
}

TEST_CASE("composed min-second semiring pulls neighbor values") {
  auto A = testutil::path3_undirected();
  SparseVector gf(3, Domain::Uint64);
  for (Index i = 0; i < 3; ++i) gf.set_element(i, std::uint64_t{i});
  SparseVector out(3, Domain::Uint64);
  mxv(out, Descriptor{}, ops::min_second(Domain::Uint64), A, gf);
  CHECK(as_uint64(*out.extract_element(0)) == 1);
  CHECK(as_uint64(*out.extract_element(1)) == 0);
  CHECK(as_uint64(*out.extract_element(2)) == 1);
}
