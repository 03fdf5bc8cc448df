#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resqnet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad index, length mismatch, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// The residual sum at the end of a segment cancelled to (numerically) zero norm.
class DegenerateSumError : public Error {
public:
  DegenerateSumError(std::size_t node_index, double norm)
      : Error("degenerate residual sum after node " + std::to_string(node_index) +
              " (norm " + std::to_string(norm) + ")"),
        node_index_(node_index), norm_(norm) {}

  std::size_t node_index() const noexcept { return node_index_; }
  double norm() const noexcept { return norm_; }

private:
  std::size_t node_index_;
  double norm_;
};

/// An experiment configuration failed validation; `field` names the offending key.
class ConfigError : public Error {
public:
  ConfigError(std::string field, const std::string &message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string &field() const noexcept { return field_; }

private:
  std::string field_;
};

} // namespace resqnet
