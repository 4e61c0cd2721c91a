#pragma once

#include <stdexcept>
#include <string>

namespace inpp {

/// Raised when an operation's precondition on its domain inputs fails
/// (bad index, pattern mismatch, inadmissible pair, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace inpp
