#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace raneykit {

/// Dense element index into a finite carrier.
using Elem = std::uint32_t;

enum class ErrorCode {
  NotAPartialOrder,
  NotALattice,
  NotComplemented,
  NotDistributive,
  NotBoolean,
  AdjointFailure,
  KuratowskiViolation,
  NotASubframe,
  AxiomViolation,
  PreconditionUnmet,
  DomainMismatch,
  IdentificationConflict,
  NotCoframe,
  NotMeetGenerating,
  DistributivityFailure,
  EmptySet,
  NotLeftEndpoint,
  NoWitnessFound,
  ParseError,
  UnresolvedReference,
  SizeLimit,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `witness()` holds the offending
/// element indices (a pair for order failures, a single element for
/// complement failures, and so on); it may be empty for structural errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<Elem> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Elem>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Elem> witness_;
};

}  // namespace raneykit
