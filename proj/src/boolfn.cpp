#include "rfs/boolfn.hpp"

#include <algorithm>
#include <cctype>

#include "rfs/error.hpp"

namespace rfs {

namespace {

void check_arity(int n) {
  if (n < 1 || n > 24) fail(errc::arity_mismatch, "arity must be in [1, 24], got " + std::to_string(n));
}

}  // namespace

BooleanFunction::BooleanFunction(int n, std::vector<std::uint8_t> table, std::string spec)
    : n_(n), total_(true), table_(std::move(table)), spec_(std::move(spec)) {
  check_arity(n);
  const std::size_t size = std::size_t{1} << n;
  if (table_.size() != size)
    fail(errc::arity_mismatch, "truth table needs " + std::to_string(size) + " entries, got " +
                                   std::to_string(table_.size()));
  domain_.reserve(size);
  for (bitstr s = 0; s < size; ++s) {
    table_[s] = table_[s] ? 1 : 0;
    domain_.push_back(s);
    (table_[s] ? ones_ : zeros_).push_back(s);
  }
  if (spec_.empty()) spec_ = "table-hex:" + std::to_string(n_) + ":" + table_hex();
}

BooleanFunction::BooleanFunction(int n, std::vector<std::uint8_t> table, std::vector<bitstr> domain,
                                 std::string spec)
    : n_(n), total_(false), table_(std::move(table)), spec_(std::move(spec)) {
  check_arity(n);
  const std::size_t size = std::size_t{1} << n;
  if (table_.size() != size)
    fail(errc::arity_mismatch, "truth table needs " + std::to_string(size) + " entries");
  if (domain.empty()) fail(errc::bad_spec, "partial function needs a nonempty domain");
  defined_.assign(size, 0);
  for (bitstr s : domain) {
    if (s >= size) fail(errc::arity_mismatch, "domain point out of range");
    defined_[s] = 1;
  }
  total_ = std::all_of(defined_.begin(), defined_.end(), [](std::uint8_t d) { return d != 0; });
  for (bitstr s = 0; s < size; ++s) {
    table_[s] = table_[s] ? 1 : 0;
    if (!defined_[s]) {
      table_[s] = 0;  // placeholder, never read
      continue;
    }
    domain_.push_back(s);
    (table_[s] ? ones_ : zeros_).push_back(s);
  }
  if (total_) defined_.clear();
  if (spec_.empty()) {
    std::string cells;
    for (bitstr s = 0; s < size; ++s)
      cells += defined(s) ? char('0' + table_[s]) : '-';
    spec_ = "ptable:" + std::to_string(n_) + ":" + cells;
  }
}

int BooleanFunction::evaluate(bitstr s) const {
  if (s >= table_.size())
    fail(errc::arity_mismatch, "input " + std::to_string(s) + " out of range for arity " + std::to_string(n_));
  if (!total_ && !defined_[s])
    fail(errc::undefined_point, "g undefined at " + format_bits(s, n_));
  return table_[s];
}

std::string BooleanFunction::table_hex() const {
  static const char* digits = "0123456789ABCDEF";
  const std::size_t size = table_.size();
  std::string out;
  // Right-aligned: pad the leading nibble when 2^n < 4.
  int pos = static_cast<int>(size) % 4 == 0 ? 0 : 4 - static_cast<int>(size) % 4;
  unsigned nibble = 0;
  for (std::size_t s = 0; s < size; ++s, ++pos) {
    nibble = (nibble << 1) | table_[s];
    if (pos % 4 == 3) {
      out += digits[nibble];
      nibble = 0;
    }
  }
  return out;
}

bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
  return a.n_ == b.n_ && a.table_ == b.table_ && a.defined_ == b.defined_;
}

std::optional<ParityForm> is_parity(const BooleanFunction& g) {
  const bitstr masks = bitstr{1} << g.arity();
  for (bitstr z = 0; z < masks; ++z) {
    for (int c = 0; c <= 1; ++c) {
      bool match = true;
      for (bitstr s : g.domain()) {
        if (g.evaluate(s) != (dot2(s, z) ^ c)) {
          match = false;
          break;
        }
      }
      if (match) return ParityForm{z, c};
    }
  }
  return std::nullopt;
}

BooleanFunction make_or(int n) {
  check_arity(n);
  std::vector<std::uint8_t> t(std::size_t{1} << n, 1);
  t[0] = 0;
  return BooleanFunction(n, std::move(t), "or:" + std::to_string(n));
}

BooleanFunction make_and(int n) {
  check_arity(n);
  std::vector<std::uint8_t> t(std::size_t{1} << n, 0);
  t.back() = 1;
  return BooleanFunction(n, std::move(t), "and:" + std::to_string(n));
}

BooleanFunction make_gmod3(int n) {
  check_arity(n);
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  for (bitstr s = 0; s < t.size(); ++s) t[s] = std::popcount(s) % 3 != 0;
  return BooleanFunction(n, std::move(t), "gmod3:" + std::to_string(n));
}

BooleanFunction make_parity(int n, bitstr z, int c) {
  check_arity(n);
  if (z >= (bitstr{1} << n)) fail(errc::arity_mismatch, "parity mask wider than arity");
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  for (bitstr s = 0; s < t.size(); ++s) t[s] = dot2(s, z) ^ (c & 1);
  return BooleanFunction(n, std::move(t),
                         "parity:" + std::to_string(n) + ":z=" + format_bits(z, n) + ",c=" + std::to_string(c & 1));
}

BooleanFunction make_const(int n, int c) {
  check_arity(n);
  std::vector<std::uint8_t> t(std::size_t{1} << n, c ? 1 : 0);
  return BooleanFunction(n, std::move(t), "const:" + std::to_string(n) + ":" + std::to_string(c ? 1 : 0));
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_int(const std::string& token, const std::string& what) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(c); }))
    fail(errc::bad_spec, "bad " + what + " token '" + token + "'");
  return std::stoi(token);
}

}  // namespace

BooleanFunction parse_fn_spec(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() < 2) fail(errc::bad_spec, "function spec '" + spec + "' needs name:arity");
  const std::string& name = parts[0];
  const int n = parse_int(parts[1], "arity");
  check_arity(n);
  const std::size_t size = std::size_t{1} << n;

  auto want_params = [&](bool yes) {
    if (yes && parts.size() != 3) fail(errc::bad_spec, "spec '" + spec + "' needs a parameter field");
    if (!yes && parts.size() != 2) fail(errc::bad_spec, "spec '" + spec + "' takes no parameter field");
  };

  if (name == "or") {
    want_params(false);
    return make_or(n);
  }
  if (name == "and") {
    want_params(false);
    return make_and(n);
  }
  if (name == "gmod3") {
    want_params(false);
    return make_gmod3(n);
  }
  if (name == "const") {
    want_params(true);
    if (parts[2] != "0" && parts[2] != "1") fail(errc::bad_spec, "bad const bit '" + parts[2] + "'");
    return make_const(n, parts[2] == "1");
  }
  if (name == "parity") {
    want_params(true);
    bitstr z = 0;
    int c = 0;
    bool have_z = false;
    for (const auto& field : split(parts[2], ',')) {
      if (field.rfind("z=", 0) == 0) {
        z = parse_bits(field.substr(2), n);
        have_z = true;
      } else if (field.rfind("c=", 0) == 0) {
        if (field != "c=0" && field != "c=1") fail(errc::bad_spec, "bad parity token '" + field + "'");
        c = field[2] - '0';
      } else {
        fail(errc::bad_spec, "bad parity token '" + field + "'");
      }
    }
    if (!have_z) fail(errc::bad_spec, "parity spec '" + spec + "' is missing z=");
    return make_parity(n, z, c);
  }
  if (name == "table" || name == "ptable") {
    want_params(true);
    const std::string& cells = parts[2];
    if (cells.size() != size)
      fail(errc::bad_spec, "table needs " + std::to_string(size) + " cells, got '" + cells + "'");
    std::vector<std::uint8_t> t(size, 0);
    std::vector<bitstr> domain;
    for (std::size_t s = 0; s < size; ++s) {
      if (cells[s] == '0' || cells[s] == '1') {
        t[s] = cells[s] - '0';
        domain.push_back(static_cast<bitstr>(s));
      } else if (!(name == "ptable" && cells[s] == '-')) {
        fail(errc::bad_spec, std::string("bad table cell '") + cells[s] + "'");
      }
    }
    if (name == "table") return BooleanFunction(n, std::move(t), spec);
    return BooleanFunction(n, std::move(t), std::move(domain), spec);
  }
  if (name == "table-hex") {
    want_params(true);
    const std::string& hex = parts[2];
    const std::size_t digits = (size + 3) / 4;
    if (hex.size() != digits)
      fail(errc::bad_spec, "table-hex needs " + std::to_string(digits) + " digits, got '" + hex + "'");
    std::vector<std::uint8_t> t(size, 0);
    const std::size_t pad = digits * 4 - size;  // leading pad bits (n = 1 only)
    std::size_t bit = 0;
    for (char ch : hex) {
      int v;
      if (ch >= '0' && ch <= '9')
        v = ch - '0';
      else if (ch >= 'A' && ch <= 'F')
        v = ch - 'A' + 10;
      else if (ch >= 'a' && ch <= 'f')
        v = ch - 'a' + 10;
      else
        fail(errc::bad_spec, std::string("bad hex digit '") + ch + "'");
      for (int k = 3; k >= 0; --k, ++bit)
        if (bit >= pad) t[bit - pad] = (v >> k) & 1;
    }
    return BooleanFunction(n, std::move(t), spec);
  }
  fail(errc::bad_spec, "unknown function name '" + name + "'");
}

}  // namespace rfs
