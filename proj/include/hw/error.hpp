#pragma once

#include <stdexcept>
#include <string>

namespace hw {

enum class Err {
  DivisionByZero,
  FieldMismatch,
  PresentationMismatch,
  NotAUnit,
  IllDefinedHom,
  NotDivisible,
  DimensionMismatch,
  OddDimension,
  BadIndex,
  BadParameter,
  VerifyFailed,
  WitnessFailed,
  FirstEntryMismatch,
  NoSolutionInBound,
  ChainStepFailed,
  NotInPullback,
  LiftVerifyFailed,
  HypothesisFailed,
  RelationFailed,
  UnsupportedShape,
  FieldTooLarge,
  RankMismatch,
  OddRank,
  ParseError,
  IoError,
};

const char* err_name(Err e);

/// All contract violations surface as this exception; code() carries the
/// machine-readable tag, what() a human explanation.
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace hw
