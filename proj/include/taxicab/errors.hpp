#pragma once

#include <stdexcept>
#include <string>

namespace taxicab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (non-finite coordinates, gamma > 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested level set has no points.
class EmptyRegion : public Error {
 public:
  using Error::Error;
};

/// No closed-form measure exists for the given configuration.
class NoMeasure : public Error {
 public:
  using Error::Error;
};

/// The operation is defined only for the taxicab and Euclidean metrics.
class UnsupportedMetric : public Error {
 public:
  using Error::Error;
};

/// A column search window did not enclose the region.
class BracketExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace taxicab
