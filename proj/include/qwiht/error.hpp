#pragma once

#include <stdexcept>
#include <string>

namespace qwiht {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// A documented precondition of an operation was violated by the caller.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A numerical quantity fell inside a tolerance dead-band, so a discrete
// answer (cluster membership, numerical rank) cannot be decided safely.
class DeadBandError : public Error {
 public:
  using Error::Error;
};

// A computed result failed one of its checked invariants.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwiht
