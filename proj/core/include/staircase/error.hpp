#pragma once

#include <stdexcept>
#include <string>

namespace staircase {

// Malformed input text (bad integers, bad JSON, wrong arity).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input violating a mathematical precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An input whose structure contradicts itself, e.g. an inconsistent
// anti-linearization or a cyclic relation.
class ValidationError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Enumeration would exceed a hard size guard.
class SizeLimitError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace staircase
