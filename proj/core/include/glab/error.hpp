#pragma once

#include <stdexcept>
#include <string>

namespace glab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: words, rationals, group ids, config files.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A value would exceed the configured digit budget or a fixed-width field.
class RepresentabilityError : public Error {
 public:
  using Error::Error;
};

// Precondition on numeric arguments violated (for example delta >= gamma).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Ball queries that cannot be answered, and ball file I/O failures.
class BallError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration guard tripped.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace glab
