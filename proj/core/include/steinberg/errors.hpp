#pragma once

#include <stdexcept>
#include <string>

namespace steinberg {

/// Invalid root-system type, rank, prime or lattice combination.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its mathematical domain
/// (non-dominant weight, non-W-invariant character, wrong type, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace steinberg

namespace steinberg {

/// Malformed serialized input (weight vectors, JSON documents).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace steinberg
