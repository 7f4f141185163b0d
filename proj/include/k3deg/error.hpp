#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace k3deg {

enum class ErrorCode {
  Parse,
  NotPoly,
  Degree,
  NotMinimal,
  ZeroForm,
  UnrecognizedCusp,
  NN,
  NNInterior,
  NegativeV,
  InconsistentType,
  BadIndex,
  NoConvergence,
  OracleMismatch,
  Precondition,
};

std::string_view error_name(ErrorCode code);

// Process exit status used by the CLI for each error class.
int exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Error(ErrorCode code, const std::string& what, int line, int column)
      : std::runtime_error(what), code_(code), line_(line), column_(column) {}

  ErrorCode code() const noexcept { return code_; }
  // 1-based source location; 0 when the error is not tied to input text.
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  ErrorCode code_;
  int line_ = 0;
  int column_ = 0;
};

}  // namespace k3deg
