#include "hw/error.hpp"

namespace hw {

const char* err_name(Err e) {
  switch (e) {
    case Err::DivisionByZero: return "DIVISION_BY_ZERO";
    case Err::FieldMismatch: return "FIELD_MISMATCH";
    case Err::PresentationMismatch: return "PRESENTATION_MISMATCH";
    case Err::NotAUnit: return "NOT_A_UNIT";
    case Err::IllDefinedHom: return "ILL_DEFINED_HOM";
    case Err::NotDivisible: return "NOT_DIVISIBLE";
    case Err::DimensionMismatch: return "DIMENSION_MISMATCH";
    case Err::OddDimension: return "ODD_DIMENSION";
    case Err::BadIndex: return "BAD_INDEX";
    case Err::BadParameter: return "BAD_PARAMETER";
    case Err::VerifyFailed: return "VERIFY_FAILED";
    case Err::WitnessFailed: return "WITNESS_FAILED";
    case Err::FirstEntryMismatch: return "FIRST_ENTRY_MISMATCH";
    case Err::NoSolutionInBound: return "NO_SOLUTION_IN_BOUND";
    case Err::ChainStepFailed: return "CHAIN_STEP_FAILED";
    case Err::NotInPullback: return "NOT_IN_PULLBACK";
    case Err::LiftVerifyFailed: return "LIFT_VERIFY_FAILED";
    case Err::HypothesisFailed: return "HYPOTHESIS_FAILED";
    case Err::RelationFailed: return "RELATION_FAILED";
    case Err::UnsupportedShape: return "UNSUPPORTED_SHAPE";
    case Err::FieldTooLarge: return "FIELD_TOO_LARGE";
    case Err::RankMismatch: return "RANK_MISMATCH";
    case Err::OddRank: return "ODD_RANK";
    case Err::ParseError: return "PARSE_ERROR";
    case Err::IoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace hw
