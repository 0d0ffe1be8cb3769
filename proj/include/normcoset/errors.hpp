#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace normcoset {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration hit the configured element cap. This is a hard error, not a
/// truncation: a truncated ball would silently corrupt every "complete within
/// radius" claim built on top of it.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap, const std::string& what)
      : Error(what + " (element cap " + std::to_string(cap) + " exceeded)"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// An element was used with a group of a different family.
class FamilyMismatch : public Error {
 public:
  using Error::Error;
};

/// The requested (group, subgroup) pairing or description is not supported.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A group table or definition file failed validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Two independent decision procedures disagreed. Always a bug, never a
/// recoverable condition.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace normcoset
