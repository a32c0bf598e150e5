#pragma once

#include <stdexcept>
#include <string>

namespace vexf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operand dimensions do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside of its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its hard combinatorial limit.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// An LP or polyhedral computation hit an infeasible or unbounded system.
class GeometryError : public Error {
 public:
  using Error::Error;
};

}  // namespace vexf
