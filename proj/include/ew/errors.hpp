#pragma once

#include <stdexcept>
#include <string>

namespace ew {

/// Input violates a documented precondition (unsupported type, bad node, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested enumeration strategy exceeds the configured size cap.
class InfeasibleStrategy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numeric evaluation hit (or came within tolerance of) a pole.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested computation needs an analytic input the library does not provide.
class OutOfScope : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ew
