// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#include "gblite/value.hpp"

#include <cmath>
#include <cstdio>

namespace gblite {

const char* domain_name(Domain d) {
  switch (d) {
    case Domain::Bool: return "bool";
    case Domain::Int64: return "int64";
    case Domain::Uint64: return "uint64";
    case Domain::Fp64: return "fp64";
  }
  return "?";
}

Scalar zero_of(Domain d) {
  switch (d) {
    case Domain::Bool: return false;
    case Domain::Int64: return std::int64_t{0};
    case Domain::Uint64: return std::uint64_t{0};
    case Domain::Fp64: return 0.0;
  }
  return 0.0;
}

Scalar one_of(Domain d) {
  switch (d) {
    case Domain::Bool: return true;
    case Domain::Int64: return std::int64_t{1};
    case Domain::Uint64: return std::uint64_t{1};
    case Domain::Fp64: return 1.0;
  }
  return 1.0;
}

bool is_nonzero(const Scalar& s) {
  switch (domain_of(s)) {
    case Domain::Bool: return as_bool(s);
    case Domain::Int64: return as_int64(s) != 0;
    case Domain::Uint64: return as_uint64(s) != 0;
    case Domain::Fp64: return as_fp64(s) != 0.0;
  }
  return false;
}

bool scalar_eq(const Scalar& a, const Scalar& b) {
  if (a.index() != b.index()) return false;
  switch (domain_of(a)) {
    case Domain::Bool: return as_bool(a) == as_bool(b);
    case Domain::Int64: return as_int64(a) == as_int64(b);
    case Domain::Uint64: return as_uint64(a) == as_uint64(b);
    case Domain::Fp64: return as_fp64(a) == as_fp64(b);
  }
  return false;
}

double scalar_to_double(const Scalar& s) {
  switch (domain_of(s)) {
    case Domain::Bool: return as_bool(s) ? 1.0 : 0.0;
    case Domain::Int64: return static_cast<double>(as_int64(s));
    case Domain::Uint64: return static_cast<double>(as_uint64(s));
    case Domain::Fp64: return as_fp64(s);
  }
  return 0.0;
}

std::string scalar_to_string(const Scalar& s) {
  char buf[64];
  switch (domain_of(s)) {
    case Domain::Bool: return as_bool(s) ? "1" : "0";
    case Domain::Int64:
      std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(as_int64(s)));
      return buf;
    case Domain::Uint64:
      std::snprintf(buf, sizeof buf, "%llu",
                    static_cast<unsigned long long>(as_uint64(s)));
      return buf;
    case Domain::Fp64:
      std::snprintf(buf, sizeof buf, "%.17g", as_fp64(s));
      return buf;
  }
  return "?";
}

const char* errcode_name(ErrCode code) {
  switch (code) {
    case ErrCode::Success: return "Success";
    case ErrCode::NoValue: return "NoValue";
    case ErrCode::DimensionMismatch: return "DimensionMismatch";
    case ErrCode::DomainMismatch: return "DomainMismatch";
    case ErrCode::IndexOutOfBounds: return "IndexOutOfBounds";
    case ErrCode::InvalidMatrix: return "InvalidMatrix";
    case ErrCode::InvalidGraph: return "InvalidGraph";
    case ErrCode::MissingProperty: return "MissingProperty";
    case ErrCode::SourceOutOfRange: return "SourceOutOfRange";
    case ErrCode::EmptyBatch: return "EmptyBatch";
    case ErrCode::NonPositiveDamping: return "NonPositiveDamping";
    case ErrCode::NonPositiveDelta: return "NonPositiveDelta";
    case ErrCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrCode::PreconditionViolated: return "PreconditionViolated";
    case ErrCode::ParseError: return "ParseError";
    case ErrCode::DuplicateEntry: return "DuplicateEntry";
    case ErrCode::IoFailure: return "IoFailure";
    case ErrCode::BadMagic: return "BadMagic";
    case ErrCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrCode::TruncatedStream: return "TruncatedStream";
    case ErrCode::LengthMismatch: return "LengthMismatch";
    case ErrCode::AliasedOutput: return "AliasedOutput";
    case ErrCode::InvalidValue: return "InvalidValue";
  }
  return "Error";
}

}  // namespace gblite
