#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadrint {

enum class ErrorKind {
  DegenerateInput,
  BadDimension,
  NotInZ,
  DegeneratePencil,
  NotApplicable,
  SliceNotTransversal,
  NonSplitQuadric,
  NotOnQuadric,
  NonGeneric,
  InternalInconsistency,
  BadParameter,
  SameSection,
  DegenerateSection,
  NotNumericallyTrivial,
  DegenerateInstance,
  SamplingBudgetExceeded,
  UnexpectedRank,
  NotRankThree,
  LineInsideS,
  InconclusiveRange,
  SingularCandidate,
  NotOnS,
  Config,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure surfaced by the library carries one of the tags above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace quadrint
