#include "raneykit/error.hpp"

namespace raneykit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotComplemented: return "NotComplemented";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::NotBoolean: return "NotBoolean";
    case ErrorCode::AdjointFailure: return "AdjointFailure";
    case ErrorCode::KuratowskiViolation: return "KuratowskiViolation";
    case ErrorCode::NotASubframe: return "NotASubframe";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::IdentificationConflict: return "IdentificationConflict";
    case ErrorCode::NotCoframe: return "NotCoframe";
    case ErrorCode::NotMeetGenerating: return "NotMeetGenerating";
    case ErrorCode::DistributivityFailure: return "DistributivityFailure";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotLeftEndpoint: return "NotLeftEndpoint";
    case ErrorCode::NoWitnessFound: return "NoWitnessFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnresolvedReference: return "UnresolvedReference";
    case ErrorCode::SizeLimit: return "SizeLimit";
  }
  return "Unknown";
}

}  // namespace raneykit
