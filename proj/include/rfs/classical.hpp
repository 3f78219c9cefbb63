#pragma once

#include "rfs/instance.hpp"

namespace rfs {

struct ClassicalResult {
  int answer;
  std::uint64_t queries;
};

// Recovers every secret bit-by-bit through basis-vector children; always
// spends exactly n^h leaf queries.
ClassicalResult solve_basis(OracleHandle& handle);

// Single-query shortcut for parity-type g: one query at (z, z, ..., z),
// corrected by h*c mod 2. Verifies `form` against g before trusting it.
ClassicalResult solve_onequery(OracleHandle& handle, const ParityForm& form);

}  // namespace rfs
