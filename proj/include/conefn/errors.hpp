#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conefn {

enum class ErrorKind {
  kDomain,          // argument outside the mathematical domain (zero vector, zero period, ...)
  kUnsupported,     // dimension or order not implemented
  kNotGood,         // cone fails the goodness condition
  kPrecondition,    // theorem / operation hypothesis not met
  kDegenerate,      // parallel normals, collapsed wedge
  kNonConvergent,   // a nome sits on the unit circle
  kConditioning,    // a nome is too close to the unit circle for double precision
  kBudget,          // truncation would exceed EvalConfig::max_terms
  kSingularAction,  // linear fractional action with vanishing denominator
  kParse,           // malformed input text (JSON, complex literal, vector literal)
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base class of every error thrown by the library. The kind drives CLI exit
/// codes and lets tests assert on the failure class without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define CONEFN_DEFINE_ERROR(Name, Kind)                                   \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  };

CONEFN_DEFINE_ERROR(DomainError, kDomain)
CONEFN_DEFINE_ERROR(UnsupportedError, kUnsupported)
CONEFN_DEFINE_ERROR(NotGoodError, kNotGood)
CONEFN_DEFINE_ERROR(PreconditionError, kPrecondition)
CONEFN_DEFINE_ERROR(DegenerateError, kDegenerate)
CONEFN_DEFINE_ERROR(NonConvergentError, kNonConvergent)
CONEFN_DEFINE_ERROR(ConditioningError, kConditioning)
CONEFN_DEFINE_ERROR(SingularActionError, kSingularAction)
CONEFN_DEFINE_ERROR(ParseError, kParse)

#undef CONEFN_DEFINE_ERROR

/// Raised when a truncated product or sum would need more terms than allowed.
/// Carries the tail estimate reached before giving up.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, double partial_tail)
      : Error(ErrorKind::kBudget, what), partial_tail_(partial_tail) {}
  double partial_tail() const noexcept { return partial_tail_; }

 private:
  double partial_tail_;
};

}  // namespace conefn
