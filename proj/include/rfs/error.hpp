#pragma once

#include <stdexcept>
#include <string>

namespace rfs {

enum class errc {
  arity_mismatch,
  undefined_point,
  bad_spec,
  unsatisfiable_promise,
  too_large,
  invalid_shortcut,
  qubit_cap_exceeded,
  constant_function,
  layout_mismatch,
  unsolved,
  ill_posed_relation,
  support_violation,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace rfs
