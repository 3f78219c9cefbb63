#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rfs/bits.hpp"

namespace rfs {

// g(s) = (s . z) xor c on the domain of g.
struct ParityForm {
  bitstr z = 0;
  int c = 0;
  friend bool operator==(const ParityForm&, const ParityForm&) = default;
};

/// Truth table of g : {0,1}^n -> {0,1}, optionally partial. Immutable after
/// construction; entries outside the domain of a partial function are stored
/// as 0 but never read through evaluate().
class BooleanFunction {
 public:
  BooleanFunction(int n, std::vector<std::uint8_t> table, std::string spec = "");
  BooleanFunction(int n, std::vector<std::uint8_t> table, std::vector<bitstr> domain,
                  std::string spec = "");

  int arity() const { return n_; }
  bool total() const { return total_; }
  std::size_t points() const { return domain_.size(); }

  bool defined(bitstr s) const { return s < table_.size() && (total_ || defined_[s]); }
  int evaluate(bitstr s) const;

  // Sorted list of defined inputs (all 2^n points for a total function).
  const std::vector<bitstr>& domain() const { return domain_; }
  // Sorted list of defined inputs with g(s) == value.
  const std::vector<bitstr>& preimage(int value) const { return value ? ones_ : zeros_; }

  bool constant_on_domain() const { return zeros_.empty() || ones_.empty(); }

  // Spec string this function parses back from ("or:2", "table:2:0111", ...).
  const std::string& spec() const { return spec_; }
  // Truth table packed most-significant-input-first into hex digits.
  std::string table_hex() const;

  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b);

 private:
  int n_;
  bool total_;
  std::vector<std::uint8_t> table_;
  std::vector<std::uint8_t> defined_;
  std::vector<bitstr> domain_, zeros_, ones_;
  std::string spec_;
};

// First (z, c) in lexicographic order with g(s) = (s.z) xor c on the whole
// domain, if any. Constants match with z = 0.
std::optional<ParityForm> is_parity(const BooleanFunction& g);

BooleanFunction make_or(int n);
BooleanFunction make_and(int n);
BooleanFunction make_gmod3(int n);  // 0 iff |s| = 0 (mod 3)
BooleanFunction make_parity(int n, bitstr z, int c);
BooleanFunction make_const(int n, int c);

// "or:2", "and:3", "gmod3:6", "parity:2:z=11,c=0", "const:2:1",
// "table:2:0111", "table-hex:4:7FFF", "ptable:2:01-1" ('-' = undefined).
BooleanFunction parse_fn_spec(const std::string& spec);

}  // namespace rfs
