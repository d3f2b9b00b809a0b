#pragma once

#include <stdexcept>
#include <string>

namespace specgeom {

// Base class for all errors raised by the library. Each error condition named
// in a module contract gets its own type so callers can catch it specifically.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidLatticeError : public Error {
public:
  using Error::Error;
};

class TruncationError : public Error {
public:
  using Error::Error;
};

class CoefficientMismatchError : public Error {
public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
public:
  using Error::Error;
};

class InvalidMetricError : public Error {
public:
  using Error::Error;
};

class InvalidConformalFactorError : public Error {
public:
  using Error::Error;
};

class UnsupportedDimensionError : public Error {
public:
  using Error::Error;
};

class DescriptorMismatchError : public Error {
public:
  using Error::Error;
};

class CoefficientError : public Error {
public:
  using Error::Error;
};

class ZeroVectorError : public Error {
public:
  using Error::Error;
};

class SolverFailureError : public Error {
public:
  explicit SolverFailureError(const std::string& msg, double best_residual = -1.0)
      : Error(msg), best_residual(best_residual) {}
  double best_residual;
};

class ScalBelowBoundError : public Error {
public:
  using Error::Error;
};

class RayleighExceedsError : public Error {
public:
  using Error::Error;
};

class InvalidProfileError : public Error {
public:
  using Error::Error;
};

class SingularProfileError : public Error {
public:
  using Error::Error;
};

class GeometryRangeError : public Error {
public:
  using Error::Error;
};

class DisconnectedInputError : public Error {
public:
  using Error::Error;
};

class NormalizationError : public Error {
public:
  using Error::Error;
};

class DimensionClassError : public Error {
public:
  using Error::Error;
};

class InconsistentFlagsError : public Error {
public:
  using Error::Error;
};

class InexactValueError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace specgeom
