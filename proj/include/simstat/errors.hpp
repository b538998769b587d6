#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simstat {

/// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (0↑-1, √ of a negative, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Vector operands with incompatible lengths.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Index or range outside the bounds of a vector.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Invalid construction input: non-finite elements, bad distribution parameters, ragged matrices.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A reduction was asked of an empty vector.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

/// The statistic is undefined for this input (too few points, zero variance).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Non-finite intermediate or result.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Moment requested that the distribution does not have (Cauchy mean, t variance for ν ≤ 2).
class UndefinedMomentError : public Error {
 public:
  using Error::Error;
};

}  // namespace simstat
