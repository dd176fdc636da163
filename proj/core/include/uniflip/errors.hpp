#pragma once

#include <stdexcept>
#include <string>

namespace uniflip {

enum class Errc {
  NotOddPrime,
  DivisionByZero,
  ZeroHasNoType,
  NotASquare,
  NoSolution,
  DimensionMismatch,
  SingularMatrix,
  NotSimilitude,
  NotInvolution,
  NotAFlip,
  EnumerationTooLarge,
  VariantRequiresSemilinear,
  DegenerateSubspace,
  NoPoint,
  NotContained,
  NotAChamber,
  WrongVariant,
  WrongClass,
  TooLarge,
  InvalidFrame,
  NotAPoint,
  MalformedInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace uniflip
