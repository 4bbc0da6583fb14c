#pragma once

#include <stdexcept>
#include <string>

namespace cubrecon {

// Malformed or inconsistent combinatorial input (length mismatch, not a
// subcomplex, not downward closed, ...).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation was violated by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Checked integer arithmetic overflowed.
class ArithmeticError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Something that a theorem guarantees cannot happen did happen.
class ContradictionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A generator family was given parameters outside its domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unreadable file contents or command-line values.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cubrecon
