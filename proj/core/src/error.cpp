#include "quadrint/error.hpp"

namespace quadrint {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::NotInZ: return "NotInZ";
    case ErrorKind::DegeneratePencil: return "DegeneratePencil";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::SliceNotTransversal: return "SliceNotTransversal";
    case ErrorKind::NonSplitQuadric: return "NonSplitQuadric";
    case ErrorKind::NotOnQuadric: return "NotOnQuadric";
    case ErrorKind::NonGeneric: return "NonGeneric";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::SameSection: return "SameSection";
    case ErrorKind::DegenerateSection: return "DegenerateSection";
    case ErrorKind::NotNumericallyTrivial: return "NotNumericallyTrivial";
    case ErrorKind::DegenerateInstance: return "DegenerateInstance";
    case ErrorKind::SamplingBudgetExceeded: return "SamplingBudgetExceeded";
    case ErrorKind::UnexpectedRank: return "UnexpectedRank";
    case ErrorKind::NotRankThree: return "NotRankThree";
    case ErrorKind::LineInsideS: return "LineInsideS";
    case ErrorKind::InconclusiveRange: return "InconclusiveRange";
    case ErrorKind::SingularCandidate: return "SingularCandidate";
    case ErrorKind::NotOnS: return "NotOnS";
    case ErrorKind::Config: return "Config";
  }
  return "Unknown";
}

}  // namespace quadrint
