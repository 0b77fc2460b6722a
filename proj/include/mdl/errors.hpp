#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdl {

/// Base of every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed concrete syntax. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An identifier that is not declared in the signature, or one used with the wrong arity.
class SignatureError : public Error {
 public:
  using Error::Error;
};

/// Ill-formed interpretation documents and constructions whose result would be ill-formed.
class ModelError : public Error {
 public:
  explicit ModelError(const std::string& message) : Error(message) {}
  explicit ModelError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Well-formed input that does not fit the operation: unknown world or individual,
/// signature mismatch, free-variable mismatch, exceeded caps.
class SemanticError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

}  // namespace mdl
