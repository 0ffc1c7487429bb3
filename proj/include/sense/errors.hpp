#pragma once

#include <stdexcept>
#include <string>

namespace sense {

/// Base class for all library errors.
class SenseError : public std::runtime_error {
 public:
  explicit SenseError(const std::string& what) : std::runtime_error(what) {}
};

/// Target coincides with an AP; the bistatic unit vectors are undefined.
class DegenerateGeometry : public SenseError {
 public:
  using SenseError::SenseError;
};

/// Matrix dimensions do not agree.
class ShapeMismatch : public SenseError {
 public:
  using SenseError::SenseError;
};

/// Zadoff-Chu root/length combination violates the CAZAC requirements.
class InvalidRoot : public SenseError {
 public:
  using SenseError::SenseError;
};

/// A physical quantity that must be strictly positive is not.
class NonPositiveInput : public SenseError {
 public:
  using SenseError::SenseError;
};

/// Subcarrier/symbol counts outside the valid range of a closed form.
class InvalidCounts : public SenseError {
 public:
  using SenseError::SenseError;
};

/// Search grid contains no feasible point.
class EmptyGrid : public SenseError {
 public:
  using SenseError::SenseError;
};

/// Refinement was started from a point outside the prior box.
class InitOutsidePrior : public SenseError {
 public:
  using SenseError::SenseError;
};

/// Fisher information matrix is not invertible (collinear or too few pairs).
class SingularFisher : public SenseError {
 public:
  using SenseError::SenseError;
};

/// Weighted least-squares normal equations are rank deficient.
class SingularNormalEquations : public SenseError {
 public:
  using SenseError::SenseError;
};

/// Gauss-Newton iteration left the numerically representable region.
class Diverged : public SenseError {
 public:
  using SenseError::SenseError;
};

/// 1D matched-filter peak sits on the edge of the search interval.
class BoundsTooNarrow : public SenseError {
 public:
  using SenseError::SenseError;
};

/// Statistic of an empty collection requested.
class EmptyList : public SenseError {
 public:
  using SenseError::SenseError;
};

/// Every fusion weight is zero.
class AllZeroWeights : public SenseError {
 public:
  using SenseError::SenseError;
};

/// Config file is not syntactically valid JSON.
class ParseError : public SenseError {
 public:
  using SenseError::SenseError;
};

/// Config file parsed but a field is missing, unknown, or out of range.
class ValidationError : public SenseError {
 public:
  using SenseError::SenseError;
};

/// Filesystem failure while emitting results.
class IoError : public SenseError {
 public:
  using SenseError::SenseError;
};

}  // namespace sense
