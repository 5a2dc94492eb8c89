#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace doxa {

enum class ErrorCode {
  EmptyStateSet,
  EmptyEvidenceSet,
  ZeroProbabilityEvidence,
  NotAPartition,
  ThresholdOutOfRange,
  NegativeWeight,
  ZeroTotalWeight,
  DuplicateEvidence,
  DuplicateState,
  UnknownState,
  ConditionOnNull,
  NotEvidence,
  QuestionTooLarge,
  InfeasibleConfig,
  NotACountermodel,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace doxa
