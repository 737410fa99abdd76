#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nested {

enum class ErrorKind {
  InvalidLevels,
  InvalidPatternSize,
  InvalidWeights,
  UnknownNeuron,
  InconsistentState,
  InvalidRamp,
  InvalidRadii,
  InvalidSeparation,
  InvalidNodeCount,
  ParseError,
  ValidationError,
  EmptyTrace,
};

std::string_view to_string(ErrorKind kind);

/// Thrown by every module on contract violations; kind() identifies the case.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nested
