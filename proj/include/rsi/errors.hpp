#pragma once

#include <stdexcept>
#include <string>

namespace rsi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a representation or a precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at (or numerically too close to) a zero of a denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A product or series could not reach its tail tolerance within the cap.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Sign tracking along a shift path could not decide the branch.
class BranchError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameters, numerics or run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace rsi
