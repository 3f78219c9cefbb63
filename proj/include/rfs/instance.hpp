#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rfs/boolfn.hpp"

#include "json.hpp"

namespace rfs {

// Path of a tree node: `depth` edge labels packed most-significant-block
// first into `packed` (depth * n bits). The root is {0, 0}.
struct NodePath {
  int depth = 0;
  std::uint64_t packed = 0;
  friend bool operator==(const NodePath&, const NodePath&) = default;
};

struct Violation {
  NodePath path;
  int expected;
  int got;  // -1 when the secret is outside the domain of g
};

/// One promise-consistent oracle instance: a tree of secret strings of
/// height h over {0,1}^n, with inner function g. Explicit instances hold all
/// secrets; lazy ones derive them on demand from (seed, path). Immutable.
class RfsInstance {
 public:
  static constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

  // Secrets are drawn uniformly within each preimage class from a stream
  // keyed by (seed, path); the root class is g^-1(answer) when an answer is
  // requested, the whole domain otherwise.
  static RfsInstance generate(int n, int h, BooleanFunction g, std::uint64_t seed,
                              std::optional<int> answer = std::nullopt, bool lazy = false,
                              std::uint64_t cap = kDefaultCap);

  int n() const { return n_; }
  int h() const { return h_; }
  const BooleanFunction& g() const { return g_; }
  bool lazy() const { return lazy_; }
  std::uint64_t seed() const { return seed_; }

  std::uint64_t secret_count() const;          // nodes at depths 0..h-1
  bitstr secret_at(const NodePath& path) const;
  int answer() const;                          // g(root secret)

  // Leaf value A(x1..xh) for the packed n*h-bit tuple; does not count.
  int leaf(std::uint64_t x) const;

  // Empty iff every internal edge satisfies g(child secret) = parent . edge.
  std::vector<Violation> validate(std::uint64_t cap = kDefaultCap) const;

  nlohmann::ordered_json to_json() const;
  static RfsInstance from_json(const nlohmann::ordered_json& j);

 private:
  RfsInstance(int n, int h, BooleanFunction g);

  bitstr derive_secret(const NodePath& path, std::optional<bitstr> parent) const;
  void materialize(std::uint64_t cap);

  int n_, h_;
  BooleanFunction g_;
  bool lazy_ = false;
  std::uint64_t seed_ = 0;
  std::optional<int> answer_constraint_;
  std::vector<std::vector<bitstr>> secrets_;  // [depth][packed path], explicit mode
};

/// Query counter around an instance. One handle per thread of execution.
class OracleHandle {
 public:
  explicit OracleHandle(const RfsInstance& inst) : inst_(&inst) {}

  int query(std::span<const bitstr> xs);
  std::uint64_t query_count() const { return count_; }
  const RfsInstance& instance() const { return *inst_; }

 private:
  const RfsInstance* inst_;
  std::uint64_t count_ = 0;
};

}  // namespace rfs
