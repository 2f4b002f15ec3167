#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nkwb {

enum class ErrorKind {
  DivisionByZero,
  ZeroDivisor,
  FieldMismatch,
  NotPrime,
  InvalidField,
  NoSuchRoot,
  NoSolution,
  DimensionMismatch,
  InvalidStructure,
  SplitnessError,
  CharTooSmall,
  DegenerateForm,
  DegenerateSearchInconclusive,
  NotCoalgebraMap,
  NotQcF,
  DimensionNotOne,
  NotGrouplike,
  InconsistentChi,
  NotRForm,
  NotSemisimple,
  TraceZero,
  NotUnimodular,
  NotPivotal,
  UnknownBuiltin,
  ParseError,
  InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

/// Every failure raised by the library. `detail` carries the witness
/// (factor polynomial, offending row, failing axiom) when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string detail = {},
        std::size_t index = 0)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind),
        detail_(std::move(detail)),
        index_(index) {}

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }
  /// Row index for NoSolution (1-based), block dimension for SplitnessError.
  std::size_t index() const { return index_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  std::size_t index_;
};

}  // namespace nkwb
