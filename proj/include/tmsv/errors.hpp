#pragma once

#include <stdexcept>
#include <string>

namespace tmsv {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define TMSV_ERROR(Name)                                            \
  struct Name : Error {                                             \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

TMSV_ERROR(DimensionMismatch);
TMSV_ERROR(EmptyBases);
TMSV_ERROR(UnequalCardinality);
TMSV_ERROR(ExchangeAxiomFailure);
TMSV_ERROR(ElementNotInGroundSet);
TMSV_ERROR(NotAdmissible);
TMSV_ERROR(DivisionNotExact);
TMSV_ERROR(GroundSetOverlap);
TMSV_ERROR(NotAFaceRelation);
TMSV_ERROR(SupportNotContained);
TMSV_ERROR(HasLoops);
TMSV_ERROR(SignConsistencyFailure);
TMSV_ERROR(NotBalanced);
TMSV_ERROR(DecompositionFailure);
TMSV_ERROR(NotUnimodular);
TMSV_ERROR(ParseError);

#undef TMSV_ERROR

}  // namespace tmsv
