// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#include "gblite/io.hpp"

#include <cctype>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gblite/ops.hpp"

namespace gblite::io {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& reason) {
  fail(ErrCode::ParseError, "line " + std::to_string(line_no) + ": " + reason);
}

std::optional<Domain> domain_from_name(const std::string& name) {
  if (name == "bool") return Domain::Bool;
  if (name == "int64") return Domain::Int64;
  if (name == "uint64") return Domain::Uint64;
  if (name == "fp64") return Domain::Fp64;
  return std::nullopt;
}

}  // namespace

SparseMatrix mm_read(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) parse_fail(1, "empty stream");
  ++line_no;
  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%MatrixMarket") parse_fail(line_no, "missing MatrixMarket banner");
  if (object != "matrix") parse_fail(line_no, "unsupported object '" + object + "'");
  if (format != "coordinate") parse_fail(line_no, "unsupported format '" + format + "'");

  Domain domain;
  bool is_pattern = false;
  if (field == "pattern") {
    domain = Domain::Bool;
    is_pattern = true;
  } else if (field == "integer") {
    domain = Domain::Int64;
  } else if (field == "real") {
    domain = Domain::Fp64;
  } else {
    parse_fail(line_no, "unsupported field '" + field + "'");
  }
  bool symmetric = false;
  if (symmetry == "symmetric") {
    symmetric = true;
  } else if (symmetry != "general") {
    parse_fail(line_no, "unsupported symmetry '" + symmetry + "'");
  }

  // Comments; a "%%domain <name>" comment overrides the value domain.
  std::optional<Domain> override_domain;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] != '%') break;
    std::istringstream c(line);
    std::string key, name;
    c >> key >> name;
    if (key == "%%domain") {
      override_domain = domain_from_name(name);
      if (!override_domain) parse_fail(line_no, "unknown domain '" + name + "'");
    }
  }
  if (override_domain && !is_pattern) domain = *override_domain;

  std::istringstream size_line(line);
  std::uint64_t nrows = 0, ncols = 0, nnz = 0;
  if (!(size_line >> nrows >> ncols >> nnz)) parse_fail(line_no, "bad size line");

  std::vector<Index> rows, cols;
  std::vector<Scalar> vals;
  rows.reserve(nnz);
  cols.reserve(nnz);
  vals.reserve(nnz);
  for (std::uint64_t k = 0; k < nnz; ++k) {
    if (!std::getline(in, line)) parse_fail(line_no + 1, "unexpected end of entries");
    ++line_no;
    std::istringstream e(line);
    std::uint64_t i1 = 0, j1 = 0;
    if (!(e >> i1 >> j1)) parse_fail(line_no, "bad entry indices");
    if (i1 == 0 || j1 == 0 || i1 > nrows || j1 > ncols)
      fail(ErrCode::IndexOutOfBounds,
           "line " + std::to_string(line_no) + ": entry (" + std::to_string(i1) +
               ", " + std::to_string(j1) + ") outside " + std::to_string(nrows) +
               " x " + std::to_string(ncols));
    Scalar v;
    if (is_pattern) {
      v = true;
    } else {
      switch (domain) {
        case Domain::Bool: {
          std::int64_t raw;
          if (!(e >> raw)) parse_fail(line_no, "missing value");
          v = raw != 0;
          break;
        }
        case Domain::Int64: {
          std::int64_t raw;
          if (!(e >> raw)) parse_fail(line_no, "missing value");
          v = raw;
          break;
        }
        case Domain::Uint64: {
          std::int64_t raw;
          if (!(e >> raw)) parse_fail(line_no, "missing value");
          if (raw < 0) parse_fail(line_no, "negative value in a uint64 matrix");
          v = static_cast<std::uint64_t>(raw);
          break;
        }
        case Domain::Fp64: {
          double raw;
          if (!(e >> raw)) parse_fail(line_no, "missing value");
          v = raw;
          break;
        }
      }
    }
    rows.push_back(i1 - 1);
    cols.push_back(j1 - 1);
    vals.push_back(v);
    if (symmetric && i1 != j1) {
      rows.push_back(j1 - 1);
      cols.push_back(i1 - 1);
      vals.push_back(v);
    }
  }

  // Build with a trap for duplicates.
  bool dup_seen = false;
  BinaryOp dup = ops::first(domain);
  dup.eval = [&dup_seen](const Scalar& x, const Scalar&, Index, Index, Index) {
    dup_seen = true;
    return x;
  };
  SparseMatrix m = build_matrix(nrows, ncols, rows, cols, vals, dup);
  if (m.nvals() != rows.size() || dup_seen)
    fail(ErrCode::DuplicateEntry, "duplicate coordinates in Matrix Market data");
  return m;
}

void mm_write(const SparseMatrix& A, std::ostream& out, bool symmetric) {
  const char* field = "real";
  bool is_pattern = false;
  switch (A.domain()) {
    case Domain::Bool: {
      // Pattern storage cannot carry explicit false entries; fall back to
      // integer 0/1 when any exist.
      bool all_true = true;
      for (const Scalar& v : A.values()) all_true = all_true && as_bool(v);
      is_pattern = all_true;
      field = all_true ? "pattern" : "integer";
      break;
    }
    case Domain::Int64:
    case Domain::Uint64:
      field = "integer";
      break;
    case Domain::Fp64:
      field = "real";
      break;
  }
  out << "%%MatrixMarket matrix coordinate " << field << ' '
      << (symmetric ? "symmetric" : "general") << '\n';
  out << "%%domain " << domain_name(A.domain()) << '\n';

  if (symmetric) {
    // The symmetric header stores one triangle; the matrix itself must hold
    // both halves with equal values.
    for (Index i = 0; i < A.nrows(); ++i) {
      auto cols = A.row_cols(i);
      auto vals = A.row_vals(i);
      for (std::size_t p = 0; p < cols.size(); ++p) {
        auto mirror = A.extract_element(cols[p], i);
        if (!mirror || !scalar_eq(*mirror, vals[p]))
          fail(ErrCode::InvalidValue,
               "symmetric write requires a symmetric matrix");
      }
    }
  }

  // With the symmetric hint, emit the lower triangle plus diagonal.
  std::uint64_t emitted = 0;
  std::ostringstream body;
  for (Index i = 0; i < A.nrows(); ++i) {
    auto cols = A.row_cols(i);
    auto vals = A.row_vals(i);
    for (std::size_t p = 0; p < cols.size(); ++p) {
      if (symmetric && cols[p] > i) continue;
      body << (i + 1) << ' ' << (cols[p] + 1);
      if (!is_pattern) body << ' ' << scalar_to_string(vals[p]);
      body << '\n';
      ++emitted;
    }
  }
  out << A.nrows() << ' ' << A.ncols() << ' ' << emitted << '\n';
  out << body.str();
  if (!out) fail(ErrCode::IoFailure, "stream write failed");
}

namespace {

constexpr char kMagic[4] = {'L', 'A', 'G', 'K'};
constexpr std::uint32_t kVersion = 1;

void put_bytes(std::ostream& out, const void* p, std::size_t n) {
  out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}

void put_u32(std::ostream& out, std::uint32_t v) { put_bytes(out, &v, 4); }
void put_u64(std::ostream& out, std::uint64_t v) { put_bytes(out, &v, 8); }

void get_bytes(std::istream& in, void* p, std::size_t n) {
  in.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n)
    fail(ErrCode::TruncatedStream, "binary stream ended early");
}

std::uint32_t get_u32(std::istream& in) {
  std::uint32_t v;
  get_bytes(in, &v, 4);
  return v;
}

std::uint64_t get_u64(std::istream& in) {
  std::uint64_t v;
  get_bytes(in, &v, 8);
  return v;
}

}  // namespace

void bin_write(const SparseMatrix& A, std::ostream& out) {
  put_bytes(out, kMagic, 4);
  put_u32(out, kVersion);
  std::uint8_t tag = static_cast<std::uint8_t>(A.domain());
  put_bytes(out, &tag, 1);
  put_u64(out, A.nrows());
  put_u64(out, A.ncols());
  put_u64(out, A.nvals());
  for (Index v : A.row_ptr()) put_u64(out, v);
  for (Index v : A.col_idx()) put_u64(out, v);
  for (const Scalar& s : A.values()) {
    switch (A.domain()) {
      case Domain::Bool: {
        std::uint8_t b = as_bool(s) ? 1 : 0;
        put_bytes(out, &b, 1);
        break;
      }
      case Domain::Int64: {
        std::int64_t v = as_int64(s);
        put_bytes(out, &v, 8);
        break;
      }
      case Domain::Uint64:
        put_u64(out, as_uint64(s));
        break;
      case Domain::Fp64: {
        double v = as_fp64(s);
        put_bytes(out, &v, 8);
        break;
      }
    }
  }
  if (!out) fail(ErrCode::IoFailure, "stream write failed");
}

SparseMatrix bin_read(std::istream& in) {
  char magic[4];
  get_bytes(in, magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0)
    fail(ErrCode::BadMagic, "not a gblite binary matrix");
  std::uint32_t version = get_u32(in);
  if (version != kVersion)
    fail(ErrCode::UnsupportedVersion, "binary format version " + std::to_string(version));
  std::uint8_t tag;
  get_bytes(in, &tag, 1);
  if (tag > 3) fail(ErrCode::InvalidValue, "bad domain tag in binary stream");
  Domain domain = static_cast<Domain>(tag);
  std::uint64_t nrows = get_u64(in);
  std::uint64_t ncols = get_u64(in);
  std::uint64_t nvals = get_u64(in);

  std::vector<Index> row_ptr(nrows + 1);
  for (auto& v : row_ptr) v = get_u64(in);
  std::vector<Index> col_idx(nvals);
  for (auto& v : col_idx) v = get_u64(in);
  std::vector<Scalar> vals;
  vals.reserve(nvals);
  for (std::uint64_t k = 0; k < nvals; ++k) {
    switch (domain) {
      case Domain::Bool: {
        std::uint8_t b;
        get_bytes(in, &b, 1);
        vals.emplace_back(b != 0);
        break;
      }
      case Domain::Int64: {
        std::int64_t v;
        get_bytes(in, &v, 8);
        vals.emplace_back(v);
        break;
      }
      case Domain::Uint64:
        vals.emplace_back(get_u64(in));
        break;
      case Domain::Fp64: {
        double v;
        get_bytes(in, &v, 8);
        vals.emplace_back(v);
        break;
      }
    }
  }
  SparseMatrix m(nrows, ncols, domain);
  m.adopt(std::move(row_ptr), std::move(col_idx), std::move(vals));
  try {
    m.validate();
  } catch (const Error& e) {
    fail(ErrCode::ParseError, std::string("binary stream holds an invalid matrix: ") + e.what());
  }
  return m;
}

SparseMatrix read_matrix_file(const std::string& path, const std::string& format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrCode::IoFailure, "cannot open " + path);
  if (format == "bin") return bin_read(in);
  if (format == "mm") return mm_read(in);
  fail(ErrCode::InvalidValue, "unknown format '" + format + "'");
}

void write_matrix_file(const SparseMatrix& A, const std::string& path,
                       const std::string& format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrCode::IoFailure, "cannot open " + path);
  if (format == "bin")
    bin_write(A, out);
  else if (format == "mm")
    mm_write(A, out);
  else
    fail(ErrCode::InvalidValue, "unknown format '" + format + "'");
}

}  // namespace gblite::io
