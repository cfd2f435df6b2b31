#pragma once

#include <stdexcept>
#include <string>

namespace thetalab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Theta is only defined on matrices whose row and column sums share one value.
class NonConstantSums : public Error {
 public:
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

/// An integer matrix holds an entry outside {0,1} where a (0,1)-matrix is needed.
class NotBinary : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// The block P handed to the standard-form assembler violates its preconditions.
class BadP : public Error {
 public:
  using Error::Error;
};

class NoCentre : public Error {
 public:
  using Error::Error;
};

class NotHS : public Error {
 public:
  using Error::Error;
};

/// Reinterpreting a graph as an incidence structure produced two points on two common lines.
class DigonError : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class StepLimit : public Error {
 public:
  using Error::Error;
};

/// Input outside the documented domain of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace thetalab
