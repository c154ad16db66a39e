#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hartop {

/// An argument lies outside the domain of an operation (e.g. an exponent that
/// is not in the basis lattice of the requested space).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two objects of different ambient dimension were combined.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed symbol input. `line` and `column` are 1-based; they are 0 when
/// the error is structural rather than lexical, in which case `path` holds a
/// JSON pointer to the offending value.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column,
             std::string path = {})
      : std::runtime_error(what), line_(line), column_(column), path_(std::move(path)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& path() const noexcept { return path_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string path_;
};

class DuplicateExponent : public ParseError {
 public:
  using ParseError::ParseError;
};

/// An operator composition whose factors do not chain (e.g. a Toeplitz
/// operator applied after a Hankel operator).
class IllFormedExpression : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A verification routine was invoked outside the hypotheses it tests.
class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hartop
