#pragma once

#include <stdexcept>
#include <string>

namespace mwall {

enum class ErrorCode {
  MalformedWord,
  TruncationOverflow,
  UndecidableAtRadius,
  NonpositiveScale,
  EmptyOrbit,
  RankDeficient,
  NotCubeType,
  TableTooLarge,
  UnstableTruncation,
  QuadratureDivergence,
  BisectionFailure,
  CrossingAxes,
  NotTranslationAxis,
  ParseError,
  HostOutsideTruncation,
  NontrivialModular,
  GluePeriodMismatch,
  InvalidArgument,
};

const char* code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace mwall
