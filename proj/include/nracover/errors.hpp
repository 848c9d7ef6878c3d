#pragma once

#include <stdexcept>
#include <string>

namespace nracover {

/// Base class for all errors raised by the solver libraries.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A polynomial vanished identically under a partial assignment in a context
/// (projection, lifting) where the underlying theory requires it not to.
/// Callers surface this as an "incomplete" outcome rather than an answer.
class NullificationError : public Error {
 public:
  explicit NullificationError(const std::string& what) : Error(what) {}
};

/// Input text could not be parsed; carries a human-readable location.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// An input uses syntax that is recognized but outside the supported fragment.
class UnsupportedFeature : public Error {
 public:
  explicit UnsupportedFeature(const std::string& what) : Error(what) {}
};

}  // namespace nracover
