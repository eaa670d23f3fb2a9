#pragma once

#include <stdexcept>
#include <string>

namespace circulant {

/// Raised when an argument falls outside the domain of an operation
/// (a missing 0 in a connection set, tau on a periodic word, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by the text parsers.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace circulant
