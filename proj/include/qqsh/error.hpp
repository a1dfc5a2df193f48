#pragma once

#include <stdexcept>
#include <string>

namespace qqsh {

/// Broad category of a failure; the CLI maps these onto exit codes.
enum class ErrorKind {
  domain,  // bad arguments to an operation (size mismatch, wrong arity, ...)
  parse,   // malformed expression or document
  spec,    // algebra specification rejected
  cap,     // computation exceeded the bound of a capped (unbounded) algebra
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error domain_error(const std::string& what) {
  return Error(ErrorKind::domain, what);
}
inline Error parse_error(const std::string& what) {
  return Error(ErrorKind::parse, what);
}
inline Error spec_error(const std::string& what) {
  return Error(ErrorKind::spec, what);
}
inline Error cap_error(const std::string& what) {
  return Error(ErrorKind::cap, what);
}

}  // namespace qqsh
