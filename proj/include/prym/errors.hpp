#pragma once

#include <stdexcept>
#include <string>

namespace prym {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define PRYM_ERROR(Name)                          \
  struct Name : Error {                           \
    explicit Name(const std::string& what)        \
        : Error(std::string(#Name ": ") + what) {} \
  }

PRYM_ERROR(MixedRadicand);
PRYM_ERROR(DivisionByZero);
PRYM_ERROR(NotADiscriminant);
PRYM_ERROR(ConnectedLocus);
PRYM_ERROR(EmptyLocus);
PRYM_ERROR(InadmissibleSpec);
PRYM_ERROR(SingularMatrix);
PRYM_ERROR(WrongFixedPointCount);
PRYM_ERROR(BudgetExceeded);
PRYM_ERROR(NonPeriodic);
PRYM_ERROR(NotCommensurable);
PRYM_ERROR(ImageNotMarked);
PRYM_ERROR(EntriesOutsideOrders);
PRYM_ERROR(NotASubgroup);
PRYM_ERROR(NotSquareTiled);
PRYM_ERROR(NotPrimitive);
PRYM_ERROR(OutsideRestrictedCase);
PRYM_ERROR(FormatError);

#undef PRYM_ERROR

}  // namespace prym
