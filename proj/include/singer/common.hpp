#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace singer {

enum class ErrorCode {
  NonPrime,
  TooLarge,
  SpecMismatch,
  DivisionByZero,
  DegreeMismatch,
  InvalidOrder,
  NotPrimePower,
  InvariantViolation,
  ZeroNotFirst,
  UnknownPoint,
  NotATree,
  BoundExceeded,
  NotCyclic,
  MissingTriangleRelation,
  NoValidM,
  HypothesisViolated,
  FamilyMismatch,
  SpecInvalid,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

// Global size bound, overridable via SINGER_LATTICE_MAX_SIZE.
long max_size_bound();

}  // namespace singer
