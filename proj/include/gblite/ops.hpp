// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "gblite/value.hpp"

namespace gblite {

// Binary operator z = f(x, y). The evaluator additionally receives the entry
// coordinates: for multiplicative use inside mxm/vxm/mxv they are
// (i = output row, k = inner index, j = output column). Positional operators
// compute from the coordinates and ignore x/y; operators that ignore an input
// value also skip the domain check for that side (uses_in1 / uses_in2), which
// lets e.g. plus-first run over an adjacency matrix of any domain.
struct BinaryOp {
  std::function<Scalar(const Scalar& x, const Scalar& y, Index i, Index k, Index j)> eval;
  Domain in1 = Domain::Fp64;
  Domain in2 = Domain::Fp64;
  Domain out = Domain::Fp64;
  bool uses_in1 = true;
  bool uses_in2 = true;
  bool positional = false;
  std::string name;

  Scalar operator()(const Scalar& x, const Scalar& y, Index i = 0, Index k = 0,
                    Index j = 0) const {
    return eval(x, y, i, k, j);
  }
};

// Unary operator for apply. May read the entry coordinates (i, j); vectors
// pass (index, 0).
struct UnaryOp {
  std::function<Scalar(const Scalar& x, Index i, Index j)> eval;
  Domain in = Domain::Fp64;
  Domain out = Domain::Fp64;
  bool uses_in = true;
  std::string name;
};

// Select predicate: keep an entry iff pred(value, i, j) is true.
// in == nullopt accepts any domain (index-only predicates).
struct SelectOp {
  std::function<bool(const Scalar& x, Index i, Index j)> pred;
  std::optional<Domain> in;
  std::string name;
};

// Commutative-enough associative operator with an identity; supplies the
// implicit value of absent entries during reduction.
struct Monoid {
  BinaryOp op;
  Scalar identity;
};

// Addition monoid plus multiplication operator.
struct Semiring {
  Monoid add;
  BinaryOp mult;
  std::string name;
};

namespace ops {

// ---- binary operators -------------------------------------------------
// Bool arithmetic maps plus->or, times->and, min->and, max->or, minus->xor,
// div->first. Signed/unsigned integer arithmetic wraps modulo 2^64; integer
// division by zero yields 0.
BinaryOp plus(Domain d);
BinaryOp minus(Domain d);
BinaryOp times(Domain d);
BinaryOp div(Domain d);
BinaryOp min(Domain d);
BinaryOp max(Domain d);
BinaryOp first(Domain d);
BinaryOp second(Domain d);
BinaryOp pair(Domain out);       // pair(x, y) = 1; ignores both inputs
BinaryOp any(Domain d);          // keeps the first contribution (see Monoid note)
BinaryOp lor();
BinaryOp land();
BinaryOp eq(Domain d);           // -> Bool
BinaryOp ne(Domain d);           // -> Bool
BinaryOp lt(Domain d);           // -> Bool
BinaryOp secondi();              // positional: returns the inner index k (Uint64)

// ---- unary operators ---------------------------------------------------
UnaryOp identity(Domain d);
UnaryOp abs(Domain d);
UnaryOp plus_thunk(const Scalar& k);             // x + k, domain of k
UnaryOp cast(Domain from, Domain to);
UnaryOp fill(Domain from, const Scalar& value);  // constant, used for pattern()

// ---- select predicates ---------------------------------------------------
SelectOp tril();  // keep strictly-lower entries (i > j)
SelectOp triu();  // keep strictly-upper entries (i < j)
SelectOp value_gt(const Scalar& k);
SelectOp value_le(const Scalar& k);
SelectOp value_lt(const Scalar& k);
SelectOp value_ge(const Scalar& k);
SelectOp in_halfopen(const Scalar& lo, const Scalar& hi);  // lo <= x < hi
SelectOp nonzero();

// ---- monoids ------------------------------------------------------------
Monoid plus_monoid(Domain d);    // identity 0
Monoid times_monoid(Domain d);   // identity 1
Monoid min_monoid(Domain d);     // identity +inf / INT64_MAX / UINT64_MAX / true
Monoid max_monoid(Domain d);     // identity -inf / INT64_MIN / 0 / false
Monoid any_monoid(Domain d);     // first contribution wins; identity unused (0)
Monoid lor_monoid();
Monoid land_monoid();

// ---- semirings ------------------------------------------------------------
Semiring plus_times(Domain d);
Semiring any_secondi();                   // Uint64 out; input values ignored
Semiring min_plus(Domain d = Domain::Fp64);
Semiring plus_first(Domain d);
Semiring plus_second(Domain d);
Semiring plus_pair(Domain out);
Semiring min_second(Domain d);

// Built-in registry: exactly the six named semirings with their stated
// domains. Lookup by name; unknown names raise InvalidValue.
const std::map<std::string, Semiring>& registry();
const Semiring& lookup(const std::string& name);

}  // namespace ops

}  // namespace gblite
