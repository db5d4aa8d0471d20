#include "conefn/errors.hpp"

namespace conefn {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kNotGood: return "not-good";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kDegenerate: return "degenerate";
    case ErrorKind::kNonConvergent: return "non-convergent";
    case ErrorKind::kConditioning: return "conditioning";
    case ErrorKind::kBudget: return "budget";
    case ErrorKind::kSingularAction: return "singular-action";
    case ErrorKind::kParse: return "parse";
  }
  return "unknown";
}

}  // namespace conefn
