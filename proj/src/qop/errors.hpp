#pragma once

#include <stdexcept>
#include <string>

namespace qop {

// Base of everything the core throws on bad input or refused work.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class HypothesisError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

// Arithmetic domain violations (inverse of zero, inexact division).
class MathError : public Error {
 public:
  using Error::Error;
};

// A result that can only come from a bug in the engine.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qop
