#pragma once

#include <stdexcept>
#include <string>

namespace minksurf {

// Base for all domain errors. what() is "<Name>: <detail>" so error names
// survive verbatim into CLI diagnostics and test assertions.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(detail.empty() ? name : name + ": " + detail),
        name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define MINKSURF_DEFINE_ERROR(ClassName, Name)                               \
  class ClassName : public Error {                                           \
   public:                                                                   \
    explicit ClassName(const std::string& detail = "") : Error(Name, detail) {} \
  }

// surface_geom
MINKSURF_DEFINE_ERROR(DegenerateMetricError, "DegenerateMetric");
MINKSURF_DEFINE_ERROR(LightLikePointError, "LightLikePoint");
MINKSURF_DEFINE_ERROR(FocalPointError, "FocalPoint");
MINKSURF_DEFINE_ERROR(OutOfDomainError, "OutOfDomain");

// revolution
MINKSURF_DEFINE_ERROR(ArcLengthViolationError, "ArcLengthViolation");
MINKSURF_DEFINE_ERROR(WrongCausalCharacterError, "WrongCausalCharacter");
MINKSURF_DEFINE_ERROR(NonIntegerEllError, "NonIntegerEll");
MINKSURF_DEFINE_ERROR(GridTooCoarseError, "GridTooCoarse");
MINKSURF_DEFINE_ERROR(DivisionByZeroError, "DivisionByZero");

// spectral1d
MINKSURF_DEFINE_ERROR(NotConvergedError, "NotConverged");
MINKSURF_DEFINE_ERROR(SingularChannelError, "SingularChannel");
MINKSURF_DEFINE_ERROR(UnstableStepError, "UnstableStep");
MINKSURF_DEFINE_ERROR(GridMismatchError, "GridMismatch");

// cli_reports
MINKSURF_DEFINE_ERROR(ConfigParseError, "ConfigParse");
MINKSURF_DEFINE_ERROR(UnknownProfileError, "UnknownProfile");

#undef MINKSURF_DEFINE_ERROR

}  // namespace minksurf
