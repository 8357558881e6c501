#pragma once

#include <stdexcept>
#include <string>

namespace blb {

// Malformed text or documents.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic outside the field, e.g. division by zero.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes or indices that do not fit together.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was handed data violating one of its stated axioms.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction produced something its own checkers reject.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace blb
