#pragma once

#include <stdexcept>
#include <string>

namespace hopfroots {

// Failure modes surfaced across the toolkit. Every concrete exception keeps a
// stable code so the C boundary can translate it without string matching.
enum class ErrorCode {
  DegenerateInput,
  PoleProximity,
  TypeMismatch,
  NonSmoothPoint,
  ParityError,
  IrregularValue,
  IrregularPoint,
  CriticalValueSearchFailed,
  UnstableCount,
  CorrectorDiverged,
  SingularCurvePoint,
  OpenOrTooLong,
  CurvesNotSeparated,
  ProjectionFailure,
  DecompositionOverlap,
  TheoremCheckFailed,
  ClassificationMismatch,
  ParseError,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define HOPFROOTS_ERROR_TYPE(Name)                                      \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what)                              \
        : Error(ErrorCode::Name, what) {}                               \
  }

HOPFROOTS_ERROR_TYPE(DegenerateInput);
HOPFROOTS_ERROR_TYPE(PoleProximity);
HOPFROOTS_ERROR_TYPE(TypeMismatch);
HOPFROOTS_ERROR_TYPE(NonSmoothPoint);
HOPFROOTS_ERROR_TYPE(ParityError);
HOPFROOTS_ERROR_TYPE(IrregularValue);
HOPFROOTS_ERROR_TYPE(IrregularPoint);
HOPFROOTS_ERROR_TYPE(CriticalValueSearchFailed);
HOPFROOTS_ERROR_TYPE(UnstableCount);
HOPFROOTS_ERROR_TYPE(CorrectorDiverged);
HOPFROOTS_ERROR_TYPE(SingularCurvePoint);
HOPFROOTS_ERROR_TYPE(OpenOrTooLong);
HOPFROOTS_ERROR_TYPE(CurvesNotSeparated);
HOPFROOTS_ERROR_TYPE(ProjectionFailure);
HOPFROOTS_ERROR_TYPE(DecompositionOverlap);
HOPFROOTS_ERROR_TYPE(TheoremCheckFailed);
HOPFROOTS_ERROR_TYPE(ClassificationMismatch);
HOPFROOTS_ERROR_TYPE(ParseError);
HOPFROOTS_ERROR_TYPE(IoError);

#undef HOPFROOTS_ERROR_TYPE

}  // namespace hopfroots
