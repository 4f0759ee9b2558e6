#pragma once
// Exception types; the CLI maps each one to a distinct exit code.
#include <stdexcept>
#include <string>

namespace racov {

// Enumeration or size cap exceeded (CLI exit code 3).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exponent-set or field search exhausted its range (CLI exit code 4).
class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace racov
