#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace lpa {

/// Raised when an input is well-formed but mathematically invalid
/// (dangling endpoint, non-admissible pair, mismatched fields, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the text and document parsers. `position` is a byte offset for
/// expressions and a JSON pointer for documents.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, std::string token, const std::string& message)
      : std::runtime_error(message), location_(std::move(location)), token_(std::move(token)) {}

  const std::string& location() const noexcept { return location_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::string location_;
  std::string token_;
};

}  // namespace lpa
