#pragma once

#include <stdexcept>
#include <string>

namespace rankcal {

/// Base class for all rankcal errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (CSV matrices, JSON configs).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Wrong or unsupported dimensions (n < 3, size mismatches).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A scenario's deformation vector violates its declared regime inequality.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration content (missing seed, empty scenario list, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The estimated score vector has exact ties, so the central ranking
/// region is undefined.
class TieError : public Error {
 public:
  using Error::Error;
};

}  // namespace rankcal
