#pragma once

#include <stdexcept>
#include <string>

namespace gforms {

// A well-formed request whose mathematics fails: a cocycle that is not a
// cocycle, an order violation, an exhausted enumeration budget.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally malformed input: wrong shapes, unknown labels, bad syntax.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gforms
