#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fncalc {

enum class ErrorKind {
  ChartMismatch,
  InvalidChart,
  IndexOutOfRange,
  DegreeError,
  ArityMismatch,
  ParseError,
  NotIdempotent,
  NonConstantTrace,
  RankOutOfRange,
  NotEquivariant,
  DerivationCheckFailed,
  ExtractionInconsistent,
  NotInDerH,
  UnknownSuite,
  FiberCoordinates,
  IoError,
};

// Stable, machine-readable name used as the CLI error prefix.
std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fncalc
