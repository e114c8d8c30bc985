#pragma once

#include <stdexcept>
#include <string>

namespace glpq {

/// Base class for every error raised by the algebra kernel.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public AlgebraError {
 public:
  DivisionByZero() : AlgebraError("division by zero") {}
};

class SymbolSetMismatch : public AlgebraError {
 public:
  SymbolSetMismatch() : AlgebraError("operands belong to different symbol sets") {}
};

/// A truncated series is indistinguishable from zero at its known precision.
class TruncationUnderflow : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NearPoleEvaluation : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class MissingSymbol : public AlgebraError {
 public:
  explicit MissingSymbol(const std::string& name)
      : AlgebraError("no value assigned to symbol '" + name + "'") {}
};

class NonInvertibleNegativePower : public AlgebraError {
 public:
  explicit NonInvertibleNegativePower(const std::string& gen)
      : AlgebraError("negative power of non-invertible generator '" + gen + "'") {}
};

class UnknownGenerator : public AlgebraError {
 public:
  explicit UnknownGenerator(const std::string& gen)
      : AlgebraError("unknown generator '" + gen + "'") {}
};

class PresentationMismatch : public AlgebraError {
 public:
  PresentationMismatch() : AlgebraError("elements belong to different presentations") {}
};

class NotAUnit : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class ParityError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class UnsupportedNegativeN : public AlgebraError {
 public:
  UnsupportedNegativeN() : AlgebraError("closed power blocks are only defined for n >= 1") {}
};

class InvalidRay : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace glpq
