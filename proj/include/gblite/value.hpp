// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "gblite/error.hpp"

namespace gblite {

using Index = std::uint64_t;

// Value domains a container can be defined over. Every container carries
// exactly one tag; mixed-domain operations are rejected, casts are explicit
// (an apply with a casting operator).
enum class Domain : std::uint8_t {
  Bool = 0,
  Int64 = 1,
  Uint64 = 2,
  Fp64 = 3,
};

// A single tagged value. The variant index is the Domain tag.
using Scalar = std::variant<bool, std::int64_t, std::uint64_t, double>;

inline Domain domain_of(const Scalar& s) {
  return static_cast<Domain>(s.index());
}

const char* domain_name(Domain d);

Scalar zero_of(Domain d);
Scalar one_of(Domain d);

inline bool as_bool(const Scalar& s) { return std::get<bool>(s); }
inline std::int64_t as_int64(const Scalar& s) { return std::get<std::int64_t>(s); }
inline std::uint64_t as_uint64(const Scalar& s) { return std::get<std::uint64_t>(s); }
inline double as_fp64(const Scalar& s) { return std::get<double>(s); }

// Valued-mask membership test: an entry is in a valued mask iff it exists
// and its value is nonzero / true.
bool is_nonzero(const Scalar& s);

// Same domain and same value. FP64 compares with ==.
bool scalar_eq(const Scalar& a, const Scalar& b);

double scalar_to_double(const Scalar& s);
std::string scalar_to_string(const Scalar& s);

}  // namespace gblite
