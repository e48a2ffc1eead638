#pragma once

#include <stdexcept>
#include <string>

namespace penney {

/// Failure classes map onto the CLI exit-code taxonomy.
enum class ErrorClass { Usage, Budget, Degenerate };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string kind, const std::string& what)
      : std::runtime_error(what), class_(cls), kind_(std::move(kind)) {}

  ErrorClass error_class() const noexcept { return class_; }
  const std::string& kind() const noexcept { return kind_; }

 private:
  ErrorClass class_;
  std::string kind_;
};

#define PENNEY_DEFINE_ERROR(Name, Cls)                       \
  class Name : public Error {                                \
   public:                                                   \
    explicit Name(const std::string& what)                   \
        : Error(ErrorClass::Cls, #Name, what) {}             \
  }

PENNEY_DEFINE_ERROR(InvalidSpec, Usage);
PENNEY_DEFINE_ERROR(InvalidArgument, Usage);
PENNEY_DEFINE_ERROR(GroupMismatch, Usage);
PENNEY_DEFINE_ERROR(WrongGroup, Usage);
PENNEY_DEFINE_ERROR(LengthTooShort, Usage);
PENNEY_DEFINE_ERROR(OrderCapExceeded, Budget);
PENNEY_DEFINE_ERROR(BudgetExceeded, Budget);
PENNEY_DEFINE_ERROR(SingularSystem, Degenerate);
PENNEY_DEFINE_ERROR(PoleAtZero, Degenerate);
PENNEY_DEFINE_ERROR(PoleAtPoint, Degenerate);
PENNEY_DEFINE_ERROR(NotReduced, Degenerate);
PENNEY_DEFINE_ERROR(DegenerateMatchup, Degenerate);
PENNEY_DEFINE_ERROR(HypothesisViolated, Degenerate);

#undef PENNEY_DEFINE_ERROR

}  // namespace penney
