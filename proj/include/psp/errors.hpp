#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psp {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A weight outside R_+ (zero or negative).
class WeightDomainError : public Error {
 public:
  WeightDomainError(std::size_t edge, const std::string& what)
      : Error(what), edge_(edge) {}
  std::size_t edge() const noexcept { return edge_; }

 private:
  std::size_t edge_;
};

/// Vertex ids out of range, malformed tilings, and similar shape errors.
class StructureError : public Error {
 public:
  using Error::Error;
};

class MalformedPathError : public Error {
 public:
  using Error::Error;
};

class UnreachableError : public Error {
 public:
  using Error::Error;
};

class ParallelLinesError : public Error {
 public:
  using Error::Error;
};

/// Query parameter outside [0, 1].
class QueryDomainError : public Error {
 public:
  using Error::Error;
};

class OracleScaleError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

/// Text input that does not follow the file grammar. `line` is 1-based, 0 if
/// not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A broken internal invariant; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace psp
