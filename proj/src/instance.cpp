#include "rfs/instance.hpp"

#include <algorithm>

#include "rfs/error.hpp"

namespace rfs {

namespace {

constexpr std::uint64_t kPathSalt = 0x5246535f70617468ull;  // "RFS_path"

std::uint64_t path_key(std::uint64_t seed, const NodePath& path, int n) {
  std::uint64_t k = mix64(seed ^ kPathSalt);
  for (int d = 0; d < path.depth; ++d) {
    const std::uint64_t block = (path.packed >> (std::uint64_t(path.depth - 1 - d) * n)) & ((1ull << n) - 1);
    k = mix64(k ^ (block + 1));
  }
  return k;
}

std::string path_string(const NodePath& path, int n) {
  std::string out;
  for (int d = 0; d < path.depth; ++d) {
    if (d) out += '/';
    out += format_bits((path.packed >> (std::uint64_t(path.depth - 1 - d) * n)) & ((1ull << n) - 1), n);
  }
  return out;
}

NodePath parse_path(const std::string& text, int n) {
  if (text.empty()) return NodePath{};
  NodePath path;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find('/', start);
    const std::string token = text.substr(start, pos == std::string::npos ? pos : pos - start);
    path.packed = (path.packed << n) | parse_bits(token, n);
    ++path.depth;
    if (pos == std::string::npos) return path;
    start = pos + 1;
  }
}

}  // namespace

RfsInstance::RfsInstance(int n, int h, BooleanFunction g) : n_(n), h_(h), g_(std::move(g)) {
  if (n < 1 || h < 1) fail(errc::arity_mismatch, "need n >= 1 and h >= 1");
  if (g_.arity() != n) fail(errc::arity_mismatch, "g arity does not match n");
  if (std::uint64_t(n) * h > 60) fail(errc::too_large, "n*h too large for packed paths");
}

std::uint64_t RfsInstance::secret_count() const {
  std::uint64_t count = 0, level = 1;
  for (int d = 0; d < h_; ++d, level <<= n_) count += level;
  return count;
}

bitstr RfsInstance::derive_secret(const NodePath& path, std::optional<bitstr> parent) const {
  const std::vector<bitstr>* cls;
  if (path.depth == 0) {
    cls = answer_constraint_ ? &g_.preimage(*answer_constraint_) : &g_.domain();
  } else {
    const bitstr edge = static_cast<bitstr>(path.packed & ((1ull << n_) - 1));
    cls = &g_.preimage(dot2(*parent, edge));
  }
  if (cls->empty()) fail(errc::unsatisfiable_promise, "empty preimage class at node " + path_string(path, n_));
  return (*cls)[bounded_index(path_key(seed_, path, n_), cls->size())];
}

bitstr RfsInstance::secret_at(const NodePath& path) const {
  if (path.depth >= h_) fail(errc::arity_mismatch, "path deeper than h-1");
  if (!lazy_) return secrets_[path.depth][path.packed];
  // Lazy derivation walks up to the root; h is small by construction.
  std::optional<bitstr> parent;
  if (path.depth > 0) parent = secret_at(NodePath{path.depth - 1, path.packed >> n_});
  return derive_secret(path, parent);
}

int RfsInstance::answer() const { return g_.evaluate(secret_at(NodePath{})); }

int RfsInstance::leaf(std::uint64_t x) const {
  const NodePath parent{h_ - 1, x >> n_};
  const bitstr edge = static_cast<bitstr>(x & ((1ull << n_) - 1));
  return dot2(secret_at(parent), edge);
}

void RfsInstance::materialize(std::uint64_t cap) {
  if (secret_count() > cap)
    fail(errc::too_large, "instance has " + std::to_string(secret_count()) + " secrets, cap is " +
                              std::to_string(cap));
  secrets_.assign(h_, {});
  for (int d = 0; d < h_; ++d) {
    secrets_[d].resize(std::uint64_t{1} << (std::uint64_t(d) * n_));
    for (std::uint64_t p = 0; p < secrets_[d].size(); ++p) {
      std::optional<bitstr> parent;
      if (d > 0) parent = secrets_[d - 1][p >> n_];
      secrets_[d][p] = derive_secret(NodePath{d, p}, parent);
    }
  }
  lazy_ = false;
}

RfsInstance RfsInstance::generate(int n, int h, BooleanFunction g, std::uint64_t seed,
                                  std::optional<int> answer, bool lazy, std::uint64_t cap) {
  RfsInstance inst(n, h, std::move(g));
  if (inst.g_.constant_on_domain())
    fail(errc::unsatisfiable_promise, "g is constant on its domain; both preimage classes are needed");
  if (answer && (*answer < 0 || *answer > 1)) fail(errc::bad_spec, "answer must be 0 or 1");
  inst.seed_ = seed;
  inst.answer_constraint_ = answer;
  inst.lazy_ = lazy;
  if (!lazy) inst.materialize(cap);
  return inst;
}

std::vector<Violation> RfsInstance::validate(std::uint64_t cap) const {
  if (secret_count() > cap)
    fail(errc::too_large, "instance too large to validate under cap " + std::to_string(cap));
  std::vector<Violation> out;
  for (int d = 1; d < h_; ++d) {
    const std::uint64_t nodes = std::uint64_t{1} << (std::uint64_t(d) * n_);
    for (std::uint64_t p = 0; p < nodes; ++p) {
      const NodePath path{d, p};
      const bitstr parent = secret_at(NodePath{d - 1, p >> n_});
      const bitstr edge = static_cast<bitstr>(p & ((1ull << n_) - 1));
      const int expected = dot2(parent, edge);
      const bitstr s = secret_at(path);
      if (!g_.defined(s)) {
        out.push_back(Violation{path, expected, -1});
        continue;
      }
      if (g_.evaluate(s) != expected) out.push_back(Violation{path, expected, g_.evaluate(s)});
    }
  }
  return out;
}

nlohmann::ordered_json RfsInstance::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["h"] = h_;
  j["g"] = g_.spec();
  j["mode"] = lazy_ ? "lazy" : "explicit";
  j["seed"] = seed_;
  if (lazy_ && answer_constraint_) j["answer"] = *answer_constraint_;
  if (!lazy_) {
    nlohmann::ordered_json secrets = nlohmann::ordered_json::object();
    for (int d = 0; d < h_; ++d)
      for (std::uint64_t p = 0; p < secrets_[d].size(); ++p)
        secrets[path_string(NodePath{d, p}, n_)] = format_bits(secrets_[d][p], n_);
    j["secrets"] = std::move(secrets);
  }
  return j;
}

RfsInstance RfsInstance::from_json(const nlohmann::ordered_json& j) {
  for (const char* key : {"n", "h", "g", "mode", "seed"})
    if (!j.contains(key)) fail(errc::bad_spec, std::string("instance JSON is missing '") + key + "'");
  const int n = j.at("n").get<int>();
  const int h = j.at("h").get<int>();
  RfsInstance inst(n, h, parse_fn_spec(j.at("g").get<std::string>()));
  inst.seed_ = j.at("seed").get<std::uint64_t>();
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "lazy") {
    inst.lazy_ = true;
    if (j.contains("answer")) inst.answer_constraint_ = j.at("answer").get<int>();
    if (inst.g_.constant_on_domain()) fail(errc::unsatisfiable_promise, "lazy instance needs nonconstant g");
    return inst;
  }
  if (mode != "explicit") fail(errc::bad_spec, "mode must be 'explicit' or 'lazy'");
  if (!j.contains("secrets")) fail(errc::bad_spec, "explicit instance JSON needs 'secrets'");
  if (inst.secret_count() > kDefaultCap) fail(errc::too_large, "explicit instance above materialization cap");
  inst.secrets_.assign(h, {});
  for (int d = 0; d < h; ++d)
    inst.secrets_[d].assign(std::uint64_t{1} << (std::uint64_t(d) * n), 0);
  std::vector<std::vector<bool>> seen(h);
  for (int d = 0; d < h; ++d) seen[d].assign(inst.secrets_[d].size(), false);
  for (const auto& [key, value] : j.at("secrets").items()) {
    const NodePath path = parse_path(key, n);
    if (path.depth >= h) fail(errc::bad_spec, "secret path '" + key + "' deeper than h-1");
    inst.secrets_[path.depth][path.packed] = parse_bits(value.get<std::string>(), n);
    seen[path.depth][path.packed] = true;
  }
  for (int d = 0; d < h; ++d)
    for (std::uint64_t p = 0; p < seen[d].size(); ++p)
      if (!seen[d][p])
        fail(errc::bad_spec, "explicit instance is missing the secret at '" +
                                 path_string(NodePath{d, p}, n) + "'");
  return inst;
}

int OracleHandle::query(std::span<const bitstr> xs) {
  const RfsInstance& inst = *inst_;
  if (static_cast<int>(xs.size()) != inst.h())
    fail(errc::arity_mismatch, "query needs exactly h = " + std::to_string(inst.h()) + " strings");
  std::uint64_t packed = 0;
  for (bitstr x : xs) {
    if (x >= (bitstr{1} << inst.n())) fail(errc::arity_mismatch, "query string out of range");
    packed = (packed << inst.n()) | x;
  }
  ++count_;
  return inst.leaf(packed);
}

}  // namespace rfs
