#pragma once

#include <stdexcept>
#include <string>

namespace ncdet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inversion of an exact zero (or an all-zero float quaternion).
struct ZeroDivision : Error {
  ZeroDivision() : Error("division by zero") {}
};

/// A row/column label that is not present in the matrix.
struct UnknownLabel : Error {
  explicit UnknownLabel(int label)
      : Error("unknown label " + std::to_string(label)) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// Gaussian elimination found no invertible pivot in some column.
struct SingularMatrix : Error {
  SingularMatrix() : Error("matrix is singular") {}
  explicit SingularMatrix(const std::string& what) : Error(what) {}
};

/// A quasideterminant-based expression is not defined on this input.
struct UndefinedResult : Error {
  explicit UndefinedResult(const std::string& what) : Error(what) {}
};

/// Combinatorial enumeration refused: the order exceeds the configured cap.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

/// Rejection sampling hit its attempt limit without a generic sample.
struct DegenerateStream : Error {
  DegenerateStream(unsigned long long seed, int attempts)
      : Error("no generic matrix after " + std::to_string(attempts) +
              " attempts (seed " + std::to_string(seed) + ")"),
        seed(seed) {}
  unsigned long long seed;
};

/// Malformed matrix file; message carries a field/line diagnostic.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace ncdet
