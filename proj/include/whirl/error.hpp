#pragma once

#include <stdexcept>
#include <string>

namespace whirl {

// Base of every error raised by the library. The concrete subclass names the
// contract that was violated.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WHIRL_DEFINE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

WHIRL_DEFINE_ERROR(RangeError);
WHIRL_DEFINE_ERROR(OverflowError);
WHIRL_DEFINE_ERROR(GraphError);
WHIRL_DEFINE_ERROR(MatchingError);
WHIRL_DEFINE_ERROR(MapError);
WHIRL_DEFINE_ERROR(CoverageError);
WHIRL_DEFINE_ERROR(NotAnEdgeError);
WHIRL_DEFINE_ERROR(PreconditionError);
WHIRL_DEFINE_ERROR(DomainError);
WHIRL_DEFINE_ERROR(VertexError);
WHIRL_DEFINE_ERROR(OrientationError);
WHIRL_DEFINE_ERROR(InfeasibleError);
WHIRL_DEFINE_ERROR(SystemError);
WHIRL_DEFINE_ERROR(StructureError);
WHIRL_DEFINE_ERROR(FractionError);
WHIRL_DEFINE_ERROR(ParseError);
WHIRL_DEFINE_ERROR(BudgetExceeded);

#undef WHIRL_DEFINE_ERROR

}  // namespace whirl
