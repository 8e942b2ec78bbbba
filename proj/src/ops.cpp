// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#include "gblite/ops.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

namespace gblite::ops {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Wrapping signed arithmetic (avoids signed-overflow UB).
i64 wrap_add(i64 x, i64 y) { return static_cast<i64>(static_cast<u64>(x) + static_cast<u64>(y)); }
i64 wrap_sub(i64 x, i64 y) { return static_cast<i64>(static_cast<u64>(x) - static_cast<u64>(y)); }
i64 wrap_mul(i64 x, i64 y) { return static_cast<i64>(static_cast<u64>(x) * static_cast<u64>(y)); }

BinaryOp make(Domain in, Domain out, std::string name,
              std::function<Scalar(const Scalar&, const Scalar&, Index, Index, Index)> f) {
  BinaryOp op;
  op.eval = std::move(f);
  op.in1 = op.in2 = in;
  op.out = out;
  op.name = std::move(name);
  return op;
}

BinaryOp make_same(Domain d, std::string name,
                   std::function<Scalar(const Scalar&, const Scalar&)> f) {
  return make(d, d, std::move(name),
              [f = std::move(f)](const Scalar& x, const Scalar& y, Index, Index, Index) {
                return f(x, y);
              });
}

bool cmp_lt(const Scalar& x, const Scalar& y) {
  switch (domain_of(x)) {
    case Domain::Bool: return as_bool(x) < as_bool(y);
    case Domain::Int64: return as_int64(x) < as_int64(y);
    case Domain::Uint64: return as_uint64(x) < as_uint64(y);
    case Domain::Fp64: return as_fp64(x) < as_fp64(y);
  }
  return false;
}

}  // namespace

BinaryOp plus(Domain d) {
  return make_same(d, "plus", [d](const Scalar& x, const Scalar& y) -> Scalar {
    switch (d) {
      case Domain::Bool: return as_bool(x) || as_bool(y);
      case Domain::Int64: return wrap_add(as_int64(x), as_int64(y));
      case Domain::Uint64: return as_uint64(x) + as_uint64(y);
      case Domain::Fp64: return as_fp64(x) + as_fp64(y);
    }
    return x;
  });
}

BinaryOp minus(Domain d) {
  return make_same(d, "minus", [d](const Scalar& x, const Scalar& y) -> Scalar {
    switch (d) {
      case Domain::Bool: return as_bool(x) != as_bool(y);
      case Domain::Int64: return wrap_sub(as_int64(x), as_int64(y));
      case Domain::Uint64: return as_uint64(x) - as_uint64(y);
      case Domain::Fp64: return as_fp64(x) - as_fp64(y);
    }
    return x;
  });
}

BinaryOp times(Domain d) {
  return make_same(d, "times", [d](const Scalar& x, const Scalar& y) -> Scalar {
    switch (d) {
      case Domain::Bool: return as_bool(x) && as_bool(y);
      case Domain::Int64: return wrap_mul(as_int64(x), as_int64(y));
      case Domain::Uint64: return as_uint64(x) * as_uint64(y);
      case Domain::Fp64: return as_fp64(x) * as_fp64(y);
    }
    return x;
  });
}

BinaryOp div(Domain d) {
  return make_same(d, "div", [d](const Scalar& x, const Scalar& y) -> Scalar {
    switch (d) {
      case Domain::Bool: return as_bool(x);
      case Domain::Int64: {
        i64 a = as_int64(x), b = as_int64(y);
        if (b == 0) return i64{0};
        if (a == std::numeric_limits<i64>::min() && b == -1) return a;
        return a / b;
      }
      case Domain::Uint64: {
        u64 b = as_uint64(y);
        return b == 0 ? u64{0} : as_uint64(x) / b;
      }
      case Domain::Fp64: return as_fp64(x) / as_fp64(y);
    }
    return x;
  });
}

BinaryOp min(Domain d) {
  return make_same(d, "min", [d](const Scalar& x, const Scalar& y) -> Scalar {
    switch (d) {
      case Domain::Bool: return as_bool(x) && as_bool(y);
      case Domain::Int64: return std::min(as_int64(x), as_int64(y));
      case Domain::Uint64: return std::min(as_uint64(x), as_uint64(y));
      case Domain::Fp64: return std::fmin(as_fp64(x), as_fp64(y));
    }
    return x;
  });
}

BinaryOp max(Domain d) {
  return make_same(d, "max", [d](const Scalar& x, const Scalar& y) -> Scalar {
    switch (d) {
      case Domain::Bool: return as_bool(x) || as_bool(y);
      case Domain::Int64: return std::max(as_int64(x), as_int64(y));
      case Domain::Uint64: return std::max(as_uint64(x), as_uint64(y));
      case Domain::Fp64: return std::fmax(as_fp64(x), as_fp64(y));
    }
    return x;
  });
}

BinaryOp first(Domain d) {
  auto op = make_same(d, "first", [](const Scalar& x, const Scalar&) { return x; });
  op.uses_in2 = false;
  return op;
}

BinaryOp second(Domain d) {
  auto op = make_same(d, "second", [](const Scalar&, const Scalar& y) { return y; });
  op.uses_in1 = false;
  return op;
}

BinaryOp pair(Domain out) {
  auto op = make(out, out, "pair",
                 [out](const Scalar&, const Scalar&, Index, Index, Index) {
                   return one_of(out);
                 });
  op.uses_in1 = op.uses_in2 = false;
  return op;
}

namespace {

// Nominal identity for the any monoid: a value real reductions never carry
// (they seed with the first element), so keeping x keeps the first
// contribution while the identity laws still hold.
Scalar any_identity(Domain d) {
  switch (d) {
    case Domain::Bool: return false;
    case Domain::Int64: return std::numeric_limits<i64>::min();
    case Domain::Uint64: return std::numeric_limits<u64>::max();
    case Domain::Fp64: return -std::numeric_limits<double>::infinity();
  }
  return false;
}

}  // namespace

BinaryOp any(Domain d) {
  Scalar id = any_identity(d);
  return make_same(d, "any", [id](const Scalar& x, const Scalar& y) {
    return scalar_eq(x, id) ? y : x;
  });
}

BinaryOp lor() {
  return make_same(Domain::Bool, "lor", [](const Scalar& x, const Scalar& y) -> Scalar {
    return as_bool(x) || as_bool(y);
  });
}

BinaryOp land() {
  return make_same(Domain::Bool, "land", [](const Scalar& x, const Scalar& y) -> Scalar {
    return as_bool(x) && as_bool(y);
  });
}

BinaryOp eq(Domain d) {
  auto op = make(d, Domain::Bool, "eq",
                 [](const Scalar& x, const Scalar& y, Index, Index, Index) -> Scalar {
                   return scalar_eq(x, y);
                 });
  return op;
}

BinaryOp ne(Domain d) {
  return make(d, Domain::Bool, "ne",
              [](const Scalar& x, const Scalar& y, Index, Index, Index) -> Scalar {
                return !scalar_eq(x, y);
              });
}

BinaryOp lt(Domain d) {
  return make(d, Domain::Bool, "lt",
              [](const Scalar& x, const Scalar& y, Index, Index, Index) -> Scalar {
                return cmp_lt(x, y);
              });
}

BinaryOp secondi() {
  BinaryOp op;
  op.eval = [](const Scalar&, const Scalar&, Index, Index k, Index) -> Scalar {
    return static_cast<u64>(k);
  };
  op.in1 = op.in2 = Domain::Uint64;
  op.out = Domain::Uint64;
  op.uses_in1 = op.uses_in2 = false;
  op.positional = true;
  op.name = "secondi";
  return op;
}

UnaryOp identity(Domain d) {
  UnaryOp f;
  f.eval = [](const Scalar& x, Index, Index) { return x; };
  f.in = f.out = d;
  f.name = "identity";
  return f;
}

UnaryOp abs(Domain d) {
  UnaryOp f;
  f.eval = [d](const Scalar& x, Index, Index) -> Scalar {
    switch (d) {
      case Domain::Bool: return as_bool(x);
      case Domain::Int64: {
        i64 v = as_int64(x);
        return v < 0 ? wrap_sub(0, v) : v;
      }
      case Domain::Uint64: return as_uint64(x);
      case Domain::Fp64: return std::fabs(as_fp64(x));
    }
    return x;
  };
  f.in = f.out = d;
  f.name = "abs";
  return f;
}

UnaryOp plus_thunk(const Scalar& k) {
  Domain d = domain_of(k);
  auto add = plus(d);
  UnaryOp f;
  f.eval = [add, k](const Scalar& x, Index, Index) { return add(x, k); };
  f.in = f.out = d;
  f.name = "plus_thunk";
  return f;
}

UnaryOp cast(Domain from, Domain to) {
  UnaryOp f;
  f.eval = [from, to](const Scalar& x, Index, Index) -> Scalar {
    double v = scalar_to_double(x);
    switch (to) {
      case Domain::Bool: return is_nonzero(x);
      case Domain::Int64:
        if (from == Domain::Uint64) return static_cast<i64>(as_uint64(x));
        return static_cast<i64>(v);
      case Domain::Uint64:
        if (from == Domain::Int64) return static_cast<u64>(as_int64(x));
        return static_cast<u64>(v);
      case Domain::Fp64: return v;
    }
    return x;
  };
  f.in = from;
  f.out = to;
  f.name = "cast";
  return f;
}

UnaryOp fill(Domain from, const Scalar& value) {
  UnaryOp f;
  f.eval = [value](const Scalar&, Index, Index) { return value; };
  f.in = from;
  f.out = domain_of(value);
  f.uses_in = false;
  f.name = "fill";
  return f;
}

SelectOp tril() {
  return {[](const Scalar&, Index i, Index j) { return i > j; }, std::nullopt, "tril"};
}

SelectOp triu() {
  return {[](const Scalar&, Index i, Index j) { return i < j; }, std::nullopt, "triu"};
}

SelectOp value_gt(const Scalar& k) {
  return {[k](const Scalar& x, Index, Index) { return cmp_lt(k, x); },
          domain_of(k), "value_gt"};
}

SelectOp value_le(const Scalar& k) {
  return {[k](const Scalar& x, Index, Index) { return !cmp_lt(k, x); },
          domain_of(k), "value_le"};
}

SelectOp value_lt(const Scalar& k) {
  return {[k](const Scalar& x, Index, Index) { return cmp_lt(x, k); },
          domain_of(k), "value_lt"};
}

SelectOp value_ge(const Scalar& k) {
  return {[k](const Scalar& x, Index, Index) { return !cmp_lt(x, k); },
          domain_of(k), "value_ge"};
}

SelectOp in_halfopen(const Scalar& lo, const Scalar& hi) {
  return {[lo, hi](const Scalar& x, Index, Index) {
            return !cmp_lt(x, lo) && cmp_lt(x, hi);
          },
          domain_of(lo), "in_halfopen"};
}

SelectOp nonzero() {
  return {[](const Scalar& x, Index, Index) { return is_nonzero(x); },
          std::nullopt, "nonzero"};
}

Monoid plus_monoid(Domain d) { return {plus(d), zero_of(d)}; }
Monoid times_monoid(Domain d) { return {times(d), one_of(d)}; }

Monoid min_monoid(Domain d) {
  Scalar id;
  switch (d) {
    case Domain::Bool: id = true; break;
    case Domain::Int64: id = std::numeric_limits<i64>::max(); break;
    case Domain::Uint64: id = std::numeric_limits<u64>::max(); break;
    case Domain::Fp64: id = std::numeric_limits<double>::infinity(); break;
  }
  return {min(d), id};
}

Monoid max_monoid(Domain d) {
  Scalar id;
  switch (d) {
    case Domain::Bool: id = false; break;
    case Domain::Int64: id = std::numeric_limits<i64>::min(); break;
    case Domain::Uint64: id = u64{0}; break;
    case Domain::Fp64: id = -std::numeric_limits<double>::infinity(); break;
  }
  return {max(d), id};
}

Monoid any_monoid(Domain d) { return {any(d), any_identity(d)}; }
Monoid lor_monoid() { return {lor(), false}; }
Monoid land_monoid() { return {land(), true}; }

Semiring plus_times(Domain d) { return {plus_monoid(d), times(d), "plus-times"}; }

Semiring any_secondi() {
  return {any_monoid(Domain::Uint64), secondi(), "any-secondi"};
}

Semiring min_plus(Domain d) { return {min_monoid(d), plus(d), "min-plus"}; }
Semiring plus_first(Domain d) { return {plus_monoid(d), first(d), "plus-first"}; }
Semiring plus_second(Domain d) { return {plus_monoid(d), second(d), "plus-second"}; }
Semiring plus_pair(Domain out) { return {plus_monoid(out), pair(out), "plus-pair"}; }
Semiring min_second(Domain d) { return {min_monoid(d), second(d), "min-second"}; }

const std::map<std::string, Semiring>& registry() {
  static const std::map<std::string, Semiring> table = {
      {"plus-times", plus_times(Domain::Uint64)},
      {"any-secondi", any_secondi()},
      {"min-plus", min_plus(Domain::Fp64)},
      {"plus-first", plus_first(Domain::Uint64)},
      {"plus-second", plus_second(Domain::Uint64)},
      {"plus-pair", plus_pair(Domain::Uint64)},
  };
  return table;
}

const Semiring& lookup(const std::string& name) {
  const auto& table = registry();
  auto it = table.find(name);
  if (it == table.end()) fail(ErrCode::InvalidValue, "unknown semiring: " + name);
  return it->second;
}

}  // namespace gblite::ops
