#pragma once

#include <stdexcept>
#include <string>

namespace vpg {

// Base of everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Document text could not be read as a representation.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A value violates a structural invariant of its type.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured search or table budget was exhausted.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class UnknownVertexError : public PreconditionError {
 public:
  explicit UnknownVertexError(const std::string& id)
      : PreconditionError("unknown vertex id '" + id + "'") {}
};

}  // namespace vpg
