#pragma once

#include <stdexcept>
#include <string>

namespace ncst {

enum class ErrorKind {
  InvalidInput,
  NotInTree,
  AlreadyPresent,
  NotSpanning,
  CrossingViolation,
  MismatchedPointSets,
  NotConvex,
  NotAPath,
  NotMonotonePath,
  Precondition,
  InvariantViolation,
  EmptyDifference,
  InvalidInputSequence,
  TooLarge,
  BadParity,
  TooSmall,
  SeedExhausted,
  NotFound,
  Unreachable,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace ncst
