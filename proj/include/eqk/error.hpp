#pragma once

#include <stdexcept>
#include <string>

namespace eqk {

/// Failure categories surfaced by the library. The CLI maps these onto its
/// machine-readable error object.
enum class ErrorKind {
  InvalidInput,
  NotACochainComplex,
  UnsupportedStabilizer,
  UnsupportedDescriptor,
  NotKnownToCollapse,
  BudgetExceeded,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string subject = {})
      : std::runtime_error(message), kind_(kind), subject_(std::move(subject)) {}

  ErrorKind kind() const { return kind_; }
  /// Offending field, subset or descriptor name; may be empty.
  const std::string& subject() const { return subject_; }

 private:
  ErrorKind kind_;
  std::string subject_;
};

}  // namespace eqk
