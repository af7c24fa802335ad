#include "mwall/errors.hpp"

namespace mwall {

const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedWord: return "MalformedWord";
    case ErrorCode::TruncationOverflow: return "TruncationOverflow";
    case ErrorCode::UndecidableAtRadius: return "UndecidableAtRadius";
    case ErrorCode::NonpositiveScale: return "NonpositiveScale";
    case ErrorCode::EmptyOrbit: return "EmptyOrbit";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotCubeType: return "NotCubeType";
    case ErrorCode::TableTooLarge: return "TableTooLarge";
    case ErrorCode::UnstableTruncation: return "UnstableTruncation";
    case ErrorCode::QuadratureDivergence: return "QuadratureDivergence";
    case ErrorCode::BisectionFailure: return "BisectionFailure";
    case ErrorCode::CrossingAxes: return "CrossingAxes";
    case ErrorCode::NotTranslationAxis: return "NotTranslationAxis";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::HostOutsideTruncation: return "HostOutsideTruncation";
    case ErrorCode::NontrivialModular: return "E_NONTRIVIAL_MODULAR";
    case ErrorCode::GluePeriodMismatch: return "E_GLUE_PERIOD_MISMATCH";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace mwall
