#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bratteli {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A diagram violates the graded-graph or edge-order axioms.
class InvalidDiagram : public Error {
 public:
  using Error::Error;
};

class LevelOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidSchedule : public Error {
 public:
  using Error::Error;
};

// The path space would be finite (every level carries a permutation).
class DegenerateDiagram : public Error {
 public:
  using Error::Error;
};

class NotProperlyOrdered : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// line/column are 1-based; both are 0 for semantic errors.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace bratteli
