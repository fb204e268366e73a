#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reslat {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation tables of the wrong shape or with out-of-range entries.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input outside its domain
/// (non-integral base, meet-reducible zero, non-filter, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Refusal to enumerate subsets of an algebra above the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A construction whose result could not be verified (e.g. a search that is
/// expected to produce a unique algebra found zero or several).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Well-formed JSON that does not describe the expected document.
class JsonError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace reslat
