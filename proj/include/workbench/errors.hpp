#ifndef WORKBENCH_ERRORS_HPP
#define WORKBENCH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace workbench {

/// Base for every error thrown by the library.
struct WorkbenchError : std::runtime_error {
  explicit WorkbenchError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Malformed or inconsistent input data (exit code 2 in the CLI).
struct ValidationError : WorkbenchError {
  using WorkbenchError::WorkbenchError;
};

/// A mathematical contract that should hold failed to hold (exit code 3).
struct ContractViolation : WorkbenchError {
  using WorkbenchError::WorkbenchError;
};

struct DimensionMismatch : ValidationError {
  using ValidationError::ValidationError;
};

struct IndexOutOfRange : ValidationError {
  using ValidationError::ValidationError;
};

struct AlgebraMismatch : ValidationError {
  using ValidationError::ValidationError;
};

/// Jacobi identity fails on the triple (i, j, k); indices are 1-based.
struct JacobiViolation : ValidationError {
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k,
                  const std::string &residual)
      : ValidationError("Jacobi identity violated on triple (" +
                        std::to_string(i) + "," + std::to_string(j) + "," +
                        std::to_string(k) + "): residual " + residual),
        i(i), j(j), k(k), residual(residual) {}
  std::size_t i, j, k;
  std::string residual;
};

/// A truncated functional was queried beyond its declared order.
struct OrderExceeded : ValidationError {
  OrderExceeded(long requested, const std::string &available)
      : ValidationError("order exceeded: requested degree " +
                        std::to_string(requested) + ", available order " +
                        available),
        requested(requested), available(available) {}
  long requested;
  std::string available;
};

struct DegreeMismatch : ValidationError {
  using ValidationError::ValidationError;
};

struct SpaceMismatch : ValidationError {
  using ValidationError::ValidationError;
};

struct NonpositiveRadius : ValidationError {
  using ValidationError::ValidationError;
};

/// Too few nonzero coefficients for a root-test estimate.
struct InsufficientOrder : ValidationError {
  using ValidationError::ValidationError;
};

/// A claimed state fails positivity; carries a printable witness.
struct PositivityFailure : ValidationError {
  PositivityFailure(const std::string &msg, const std::string &witness)
      : ValidationError(msg), witness(witness) {}
  std::string witness;
};

/// Gram assembly found conjugate-symmetry broken (the functional is not
/// hermitian), so no LDL* certificate is possible.
struct HermitianViolation : ValidationError {
  using ValidationError::ValidationError;
};

struct Unstabilized : ValidationError {
  using ValidationError::ValidationError;
};

/// Input file rejected; line/column are 1-based.
struct ParseError : ValidationError {
  ParseError(const std::string &msg, std::size_t line, std::size_t column)
      : ValidationError("parse error at line " + std::to_string(line) +
                        ", column " + std::to_string(column) + ": " + msg),
        message(msg), line(line), column(column) {}
  std::string message;
  std::size_t line, column;
};

} // namespace workbench

#endif
