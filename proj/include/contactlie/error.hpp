#pragma once

#include <stdexcept>
#include <string>

namespace contactlie {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Shapes of vectors, forms or matrices disagree.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its documented domain
/// (odd/even dimension, non-contact form, failed cocycle, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Substitution did not assign a variable that occurs in the scalar.
class MissingVariable : public Error {
public:
  explicit MissingVariable(std::string name)
      : Error("no value assigned to variable '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

/// Text input could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

} // namespace contactlie
