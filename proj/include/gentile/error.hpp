#pragma once

#include <stdexcept>
#include <string>

namespace gt {

enum class Errc {
  ParseError,
  DivisionByZero,
  RadicandMismatch,
  NegativeRadicand,
  DegenerateSource,
  NotASimilarity,
  InvalidArgument,
  RatioNotRational,
  NTooSmall,
  InvalidParams,
  NotRightTriangle,
  UnsupportedMaster,
  MismatchedTileCounts,
  SingularFixedPointSystem,
  UnknownCurve,
  PreconditionFailed,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace gt
