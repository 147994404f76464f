#pragma once

#include <stdexcept>
#include <string>
#include <vector>
#include <complex>

namespace cgeom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes of operands do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside its documented range.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a hard size limit.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A point lies outside the domain, or a kernel base is not positive.
class DomainViolation : public Error {
 public:
  using Error::Error;
};

/// A scalar field returned a non-finite value at a stencil point.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, std::vector<std::complex<double>> point)
      : Error(what), point_(std::move(point)) {}
  const std::vector<std::complex<double>>& point() const noexcept { return point_; }

 private:
  std::vector<std::complex<double>> point_;
};

/// A mapped point lost the structured form its coordinates require.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Two routes to the same quantity disagreed beyond tolerance.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

/// Requested case is not supported (domain kind, anchor, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Nested finite differences lost too much precision.
class PrecisionLoss : public Error {
 public:
  using Error::Error;
};

/// Metric matrix is not positive definite at an interior point.
class MetricDegeneracy : public Error {
 public:
  using Error::Error;
};

/// Matrix is numerically singular.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

}  // namespace cgeom
