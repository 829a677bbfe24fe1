#pragma once

#include <stdexcept>
#include <string>

namespace kge {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file (bad column count, non-numeric field, ...).
// Messages carry the file path and 1-based line number.
class ParseError : public Error {
 public:
  using Error::Error;
  ParseError(const std::string& path, std::size_t line, const std::string& what)
      : Error(path + ":" + std::to_string(line) + ": " + what) {}
};

// A name was not found in a dictionary and growing was not allowed.
class LookupError : public Error {
 public:
  using Error::Error;
};

// Vector/matrix dimensions do not line up.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Bad or inconsistent run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// File could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace kge
