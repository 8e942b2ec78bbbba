// gblite: sparse linear algebra over semirings, with GAP-style graph algorithms
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "gblite/containers.hpp"

namespace gblite::io {

// Matrix Market coordinate reader. Accepts fields pattern/integer/real and
// symmetries general/symmetric; anything else is a ParseError naming the
// token. Indices in the file are 1-based. Pattern entries load as Bool true,
// integer as Int64, real as Fp64; a "%%domain <name>" comment written by
// mm_write overrides the value domain (this is how Uint64 round-trips).
// Symmetric inputs materialize both (i,j) and (j,i), the diagonal once.
// Duplicate entries are an error.
SparseMatrix mm_read(std::istream& in);

// Writer: real values carry 17 significant digits so mm_read(mm_write(A))
// reproduces A exactly. symmetric=true writes only the lower triangle with
// the symmetric header and requires a symmetric matrix.
void mm_write(const SparseMatrix& A, std::ostream& out, bool symmetric = false);

// Binary container format, little-endian:
//   magic "LAGK", version u32 = 1, domain u8, nrows u64, ncols u64,
//   nvals u64, row_ptr[nrows+1] u64, col_idx[nvals] u64, values raw
//   (bool = 1 byte, int64/uint64/fp64 = 8 bytes).
// Round-trips are bit-exact.
void bin_write(const SparseMatrix& A, std::ostream& out);
SparseMatrix bin_read(std::istream& in);

// Convenience file wrappers; IoFailure when the file cannot be opened.
SparseMatrix read_matrix_file(const std::string& path, const std::string& format);
void write_matrix_file(const SparseMatrix& A, const std::string& path,
                       const std::string& format);

}  // namespace gblite::io
