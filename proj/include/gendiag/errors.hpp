#pragma once

#include <stdexcept>
#include <string>

namespace gendiag {

enum class errc {
  malformed_input = 1,
  not_a_bijection,
  repeated_element,
  out_of_range,
  degree_mismatch,
  degree_too_large,
  not_certified,
  not_incomparable,
  case_search_failed,
  generation_failed,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace gendiag
