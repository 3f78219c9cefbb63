#include "rfs/classical.hpp"

#include "rfs/error.hpp"

namespace rfs {

namespace {

// Secret of the node at `path`: bit i is the answer of child e_i, which is a
// leaf query at depth h-1 and a recursive solve above.
bitstr recover_secret(OracleHandle& handle, std::vector<bitstr>& path) {
  const RfsInstance& inst = handle.instance();
  const int n = inst.n();
  const int depth = static_cast<int>(path.size());
  bitstr s = 0;
  for (int i = 1; i <= n; ++i) {
    path.push_back(basis_vector(i, n));
    int bit;
    if (depth + 1 == inst.h()) {
      bit = handle.query(path);
    } else {
      bit = inst.g().evaluate(recover_secret(handle, path));
    }
    path.pop_back();
    s = (s << 1) | bit;
  }
  return s;
}

}  // namespace

ClassicalResult solve_basis(OracleHandle& handle) {
  const std::uint64_t start = handle.query_count();
  std::vector<bitstr> path;
  path.reserve(handle.instance().h());
  const bitstr root = recover_secret(handle, path);
  return {handle.instance().g().evaluate(root), handle.query_count() - start};
}

ClassicalResult solve_onequery(OracleHandle& handle, const ParityForm& form) {
  const RfsInstance& inst = handle.instance();
  const BooleanFunction& g = inst.g();
  for (bitstr s : g.domain())
    if (g.evaluate(s) != (dot2(s, form.z) ^ form.c))
      fail(errc::invalid_shortcut, "g is not the parity form (z=" + format_bits(form.z, g.arity()) +
                                       ", c=" + std::to_string(form.c) + ")");
  if (form.z == 0) return {form.c, handle.query_count()};
  const std::vector<bitstr> diagonal(inst.h(), form.z);
  const int bit = handle.query(diagonal);
  return {bit ^ ((inst.h() * form.c) & 1), handle.query_count()};
}

}  // namespace rfs
