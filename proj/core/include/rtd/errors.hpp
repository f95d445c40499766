#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rtd {

// Raised when an operation is called outside its documented domain
// (bad sizes, out-of-range parameters, degenerate inputs).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input. `offset` is the byte position of the first
// offending character in the input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A point lies outside the feasible polytope of a quadratic program.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A construction cannot be realized with the requested parameters.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent certification routes disagree.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search ran out of budget before reaching a conclusive answer.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rtd
