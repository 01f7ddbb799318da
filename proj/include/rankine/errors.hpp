#pragma once

#include <stdexcept>
#include <string>

namespace rankine {

// Input outside the validity envelope of the property formulation, or an
// invalid cycle specification.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// An iterative solver failed to converge within its budget.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed file or command-line value.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rankine
