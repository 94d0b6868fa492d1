#pragma once

#include <stdexcept>
#include <string>

namespace vca {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Vectors of different lengths, or a vector that does not fit a complex.
class DimensionError : public Error {
public:
  using Error::Error;
};

class EmptyComplexError : public Error {
public:
  using Error::Error;
};

/// A weight that is not a positive integer, or a facet without exactly one weight.
class WeightError : public Error {
public:
  using Error::Error;
};

/// Weighted facet rows that are duplicated or dominated by another row.
class AntichainError : public Error {
public:
  using Error::Error;
};

/// Degree 0 passed where a positive degree is required.
class DegreeError : public Error {
public:
  using Error::Error;
};

/// An argument violating a documented precondition (e.g. a facet entry
/// that must be finite and positive, or a degree below a required bound).
class PreconditionError : public Error {
public:
  using Error::Error;
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_{line} {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

}  // namespace vca
