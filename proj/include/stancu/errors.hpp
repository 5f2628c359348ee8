#pragma once

#include <stdexcept>
#include <string>

namespace stancu {

/// Bad argument to an operation (point outside the domain, size mismatch, ...).
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// Unsupported or invalid configuration (unknown generator, failed (P1)-(P3) checks, ...).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Resolution n too small for the domain box: some coordinate has an empty index range.
class ResolutionError : public std::runtime_error {
 public:
  explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// Sampled data does not cover the index set, or a stored value is missing.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stancu
