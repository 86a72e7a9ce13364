#pragma once

#include <stdexcept>
#include <string>

namespace bifree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A combinatorial size cap was exceeded (partition size, table degree).
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Two partitions are not comparable in the refinement order.
class OrderError : public Error {
 public:
  using Error::Error;
};

/// Degree mismatch between operands or a table too small for the request.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Inversion of a series with zero constant term.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Fock model whose left and right variables do not commute.
class CommutationError : public Error {
 public:
  using Error::Error;
};

/// Levy-Hincin data whose cumulant formulas disagree on an overlapping index.
class InconsistentDataError : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for the given kind of input.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Payload or matrix shape does not fit the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bifree
