#pragma once

#include <stdexcept>
#include <string>

namespace duporcq {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DUPORCQ_ERROR(Name)                              \
  class Name : public Error {                            \
   public:                                               \
    explicit Name(const std::string& what) : Error(what) {} \
  }

// exactpoly
DUPORCQ_ERROR(ParseError);
DUPORCQ_ERROR(ZeroDegree);
DUPORCQ_ERROR(NotDivisible);
DUPORCQ_ERROR(UnknownVariable);

// geometry
DUPORCQ_ERROR(DegenerateBase);
DUPORCQ_ERROR(DegeneratePlatform);
DUPORCQ_ERROR(InvalidAffineMap);
DUPORCQ_ERROR(NotCollinear);
DUPORCQ_ERROR(CoincidentBase);
DUPORCQ_ERROR(NotDuporcq);
DUPORCQ_ERROR(NonPlanar);

// moebius
DUPORCQ_ERROR(AllZero);
DUPORCQ_ERROR(NotCollinearDirection);
DUPORCQ_ERROR(InvalidDirection);

// study
DUPORCQ_ERROR(ExceptionalPose);
DUPORCQ_ERROR(StudyViolation);
DUPORCQ_ERROR(NotFFree);
DUPORCQ_ERROR(AnsatzSolvable);

// selfmotion
DUPORCQ_ERROR(Unrealizable);
DUPORCQ_ERROR(InconsistentSystem);
DUPORCQ_ERROR(NoRealPose);
DUPORCQ_ERROR(RankTooHigh);
DUPORCQ_ERROR(ConstructionDegenerate);

// io
DUPORCQ_ERROR(SchemaError);

#undef DUPORCQ_ERROR

}  // namespace duporcq
