#pragma once

#include <stdexcept>
#include <string>

namespace btz {

enum class Errc {
  invalid_rank,
  invalid_horizon,
  invalid_weight,
  undefined_critical_index,
  domain_error,
  precondition_violation,
  invalid_index,
  invalid_argument,
  unsupported_rank,
  parse_error,
};

// Kebab-case name, e.g. "invalid-weight".
const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace btz
