// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace gblite {

// Status codes follow a sign convention: 0 is success, negative values are
// errors, positive values are warnings.
enum class ErrCode : int {
  Success = 0,

  // warnings
  NoValue = 1,  // element query hit an empty position

  // errors
  DimensionMismatch = -1,
  DomainMismatch = -2,
  IndexOutOfBounds = -3,
  InvalidMatrix = -4,
  InvalidGraph = -5,
  MissingProperty = -6,
  SourceOutOfRange = -7,
  EmptyBatch = -8,
  NonPositiveDamping = -9,
  NonPositiveDelta = -10,
  NonPositiveWeight = -11,
  PreconditionViolated = -12,
  ParseError = -13,
  DuplicateEntry = -14,
  IoFailure = -15,
  BadMagic = -16,
  UnsupportedVersion = -17,
  TruncatedStream = -18,
  LengthMismatch = -19,
  AliasedOutput = -20,
  InvalidValue = -21,
};

const char* errcode_name(ErrCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrCode code, const std::string& message)
      : std::runtime_error(std::string(errcode_name(code)) + ": " + message),
        code_(code) {}

  ErrCode code() const noexcept { return code_; }

 private:
  ErrCode code_;
};

[[noreturn]] inline void fail(ErrCode code, const std::string& message) {
  throw Error(code, message);
}

// Result type for validity checks that report rather than throw.
// Messages are capped at kMaxMessage characters.
struct Status {
  int code = 0;
  std::string message;

  static constexpr std::size_t kMaxMessage = 256;

  bool ok() const { return code == 0; }

  static Status success() { return {}; }

  static Status error(ErrCode c, std::string msg) {
    if (msg.size() > kMaxMessage) msg.resize(kMaxMessage);
    return Status{static_cast<int>(c), std::move(msg)};
  }
};

}  // namespace gblite
