#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hocfg {

enum class ErrorCode {
  parse,
  axiom_violation,
  irregular,
  without_dual,
  plane_too_small,
  invalid_argument,
  budget_exceeded,
  undefined,
  io,
};

const char* to_string(ErrorCode code);

// Every failure in the library is reported through this type. Domain errors
// carry a witness: the point sets that demonstrate the violation (for an
// axiom breach: the offending k+1 points followed by the two planes).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::vector<int>> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::vector<int>>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::vector<int>> witness_;
};

}  // namespace hocfg
