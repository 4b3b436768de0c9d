#pragma once

#include <stdexcept>

namespace excedance {

/// Raised when a request exceeds a desk-scale enumeration guard.
class GuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace excedance
