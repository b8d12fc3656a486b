#pragma once

#include <stdexcept>
#include <string>

namespace seshadri {

enum class ErrorKind {
  DegenerateInput,
  OutOfRange,
  EmptySet,
  WitnessTooLarge,
  ArityMismatch,
  PrimeTooSmall,
  SizeGuardrail,
  InvalidDissection,
  EmptyPolygonAtScale,
  Parse,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so that the CLI can map it
// onto an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace seshadri
