#pragma once

#include <stdexcept>
#include <string>

namespace mcvc {

// Bad user input: malformed files, out-of-range indices, invalid parameters.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A matroid kind (or similar) the requested operation does not handle.
class unsupported_error : public std::runtime_error {
 public:
  explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or memory budget was exhausted.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition was violated by the caller.
class contract_error : public std::runtime_error {
 public:
  explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; always a bug, never a usage problem.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mcvc
