#include "btz/error.hpp"

namespace btz {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_rank: return "invalid-rank";
    case Errc::invalid_horizon: return "invalid-horizon";
    case Errc::invalid_weight: return "invalid-weight";
    case Errc::undefined_critical_index: return "undefined-critical-index";
    case Errc::domain_error: return "domain-error";
    case Errc::precondition_violation: return "precondition-violation";
    case Errc::invalid_index: return "invalid-index";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::unsupported_rank: return "unsupported-rank";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace btz
