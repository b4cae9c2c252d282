#pragma once

#include <stdexcept>
#include <string>

namespace nlgate {

enum class ErrorCode {
  DuplicateQubit,
  UnknownQubit,
  DimensionMismatch,
  RegisterMismatch,
  NotUnitary,
  NotHermitian,
  NotNormalized,
  NotFinite,
  SameNode,
  LocalityViolation,
  KnowledgeViolation,
  NonUniformCommunication,
  NotNonlocal,
  BadArity,
  RankMismatch,
  NotBellDiagonal,
};

const char* to_string(ErrorCode code);

/// All validation failures across the library throw this single exception
/// type; the code identifies the violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nlgate
