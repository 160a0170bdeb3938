#pragma once

#include <stdexcept>
#include <string>

namespace zcat {

// Bad or malformed input (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input outside the supported range, e.g. support queries
// for classes of rank > 1, or a product exceeding the simplex budget
// (CLI exit code 3).
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// User-supplied annotations produced an empty bounds interval (CLI exit code 4).
class AnnotationConflictError : public std::runtime_error {
 public:
  explicit AnnotationConflictError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zcat
