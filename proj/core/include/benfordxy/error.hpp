#pragma once

#include <stdexcept>
#include <string>

namespace bxy {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (non-finite value,
/// non-positive temperature, odd chain length, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Least-squares design matrix without full column rank.
class SingularFitError : public Error {
public:
  using Error::Error;
};

/// A window whose observable is constant, so the unit rescaling is undefined.
class DegenerateWindowError : public Error {
public:
  using Error::Error;
};

class EmptyHistogramError : public Error {
public:
  using Error::Error;
};

/// Inconsistent configuration detected before any computation starts.
class ConfigError : public Error {
public:
  using Error::Error;
};

class NoTransitionError : public Error {
public:
  using Error::Error;
};

/// Pseudo-critical points that do not all approach the critical point from
/// below.
class MixedSideError : public Error {
public:
  using Error::Error;
};

class InsufficientRidgeError : public Error {
public:
  using Error::Error;
};

} // namespace bxy
