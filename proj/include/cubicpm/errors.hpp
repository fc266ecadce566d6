#pragma once

#include <stdexcept>
#include <string>

namespace cubicpm {

// Base of every error raised by the library. what() carries a human-readable
// message; kind() names the failure class as it appears in certificates.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define CUBICPM_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

// graph-core
CUBICPM_DEFINE_ERROR(MalformedGraph6)
CUBICPM_DEFINE_ERROR(MalformedSparse6)
CUBICPM_DEFINE_ERROR(MalformedCmg)
CUBICPM_DEFINE_ERROR(NotCubic)
CUBICPM_DEFINE_ERROR(EmptySide)
CUBICPM_DEFINE_ERROR(Disconnected)
CUBICPM_DEFINE_ERROR(HasBridge)

// matching
CUBICPM_DEFINE_ERROR(CapExceeded)
CUBICPM_DEFINE_ERROR(RequiredNotMatching)
CUBICPM_DEFINE_ERROR(NotSixCut)

// edge-colouring
CUBICPM_DEFINE_ERROR(ConstraintConflict)
CUBICPM_DEFINE_ERROR(UncolouredEdgeInCut)
CUBICPM_DEFINE_ERROR(StartColourMismatch)
CUBICPM_DEFINE_ERROR(StaleChain)
CUBICPM_DEFINE_ERROR(ParityViolation)

// arrays-defect
CUBICPM_DEFINE_ERROR(NotOptimalEvidence)

// covers
CUBICPM_DEFINE_ERROR(NoCoverFound)
CUBICPM_DEFINE_ERROR(LemmaViolated)
CUBICPM_DEFINE_ERROR(PreconditionDefectNot3)
CUBICPM_DEFINE_ERROR(CorePathMatchingFailed)
CUBICPM_DEFINE_ERROR(CoincidentEndpoints)
CUBICPM_DEFINE_ERROR(PreconditionViolated)

// structure
CUBICPM_DEFINE_ERROR(WitnessInvalid)

// families
CUBICPM_DEFINE_ERROR(BadParameter)
CUBICPM_DEFINE_ERROR(NotBipartite)
CUBICPM_DEFINE_ERROR(TooSmall)

#undef CUBICPM_DEFINE_ERROR

// A guarantee that a theorem promises was observed to fail on an instance.
// Raised only when a search contradicts a proven statement, so it signals a
// bug or an invalid input that slipped past the precondition checks.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cubicpm
