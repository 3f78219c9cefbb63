#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "rfs/error.hpp"

namespace rfs {

// An n-bit string lives in the low n bits of a word. The leftmost character
// of the printed string is the most significant bit, so bit i (1-indexed from
// the left) of s is (s >> (n - i)) & 1. This convention is global: truth
// tables, node paths and leaf indices all read most-significant-block first.
using bitstr = std::uint32_t;

inline int dot2(std::uint64_t a, std::uint64_t b) { return std::popcount(a & b) & 1; }

inline int bit_at(bitstr s, int i, int n) { return (s >> (n - i)) & 1; }

// e_i: the single 1 sits at position i (1-indexed from the left).
inline bitstr basis_vector(int i, int n) { return bitstr{1} << (n - i); }

inline std::string format_bits(std::uint64_t s, int n) {
  std::string out(n, '0');
  for (int i = 0; i < n; ++i)
    if ((s >> (n - 1 - i)) & 1) out[i] = '1';
  return out;
}

inline bitstr parse_bits(const std::string& text, int n) {
  if (static_cast<int>(text.size()) != n)
    fail(errc::arity_mismatch, "bit string '" + text + "' does not have length " + std::to_string(n));
  bitstr s = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') fail(errc::bad_spec, std::string("bad bit character '") + ch + "'");
    s = (s << 1) | (ch == '1');
  }
  return s;
}

// splitmix64 finalizer; the workhorse behind all seeded derivations.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Unbiased index in [0, m) from a 64-bit key, rejection over a counter.
inline std::uint64_t bounded_index(std::uint64_t key, std::uint64_t m) {
  const std::uint64_t rem = (0 - m) % m;  // 2^64 mod m
  std::uint64_t x = mix64(key);
  for (std::uint64_t ctr = 1; rem != 0 && x > ~rem; ++ctr) x = mix64(key + ctr);
  return x % m;
}

}  // namespace rfs
