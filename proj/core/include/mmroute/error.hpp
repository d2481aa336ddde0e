#pragma once

#include <stdexcept>
#include <string>

namespace mmroute {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value lies outside the domain an operation accepts.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A node or stop index does not belong to the queried model.
class InvalidNode : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A query against an index that holds no points.
class EmptyStructure : public Error {
 public:
  using Error::Error;
};

/// Malformed input data. `location` is a human readable position
/// ("line 12", "stops.txt:4") or empty when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string location = {})
      : Error(location.empty() ? message : location + ": " + message),
        location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// Inconsistent model or tool configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace mmroute
