#pragma once

#include <stdexcept>
#include <string>

namespace surfrep {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SURFREP_ERROR(Name)                                              \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

SURFREP_ERROR(IdentityInput);
SURFREP_ERROR(NonConvergence);
SURFREP_ERROR(NotInU);
SURFREP_ERROR(DegenerateConfiguration);
SURFREP_ERROR(NotFixing);
SURFREP_ERROR(NotBig);
SURFREP_ERROR(NotCentral);
SURFREP_ERROR(InvalidRepresentation);
SURFREP_ERROR(BranchAmbiguity);
SURFREP_ERROR(InvalidOrder);
SURFREP_ERROR(NotOrderPreserving);
SURFREP_ERROR(HypothesisViolation);
SURFREP_ERROR(DegenerateAngle);
SURFREP_ERROR(IncoherentStructure);
SURFREP_ERROR(NotIsometry);
SURFREP_ERROR(OrientationNotPreserved);
SURFREP_ERROR(LabelMismatch);
SURFREP_ERROR(FixedBoundaryPoint);
SURFREP_ERROR(RewritingFailure);
SURFREP_ERROR(SamplerExhausted);
SURFREP_ERROR(ParseError);

#undef SURFREP_ERROR

}  // namespace surfrep
