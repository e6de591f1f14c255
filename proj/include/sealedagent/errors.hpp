#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sealedagent {

enum class ErrorCode {
    TaintViolation,
    DerefInPrivilegedContext,
    UnknownSymbol,
    BackendFailure,
    DuplicateTool,
    UnknownTool,
    ArityMismatch,
    CapabilityViolation,
    ConfirmationDenied,
    AddressParamViolation,
    UnresolvedStepOutput,
    ValidationFailure,
    ExhaustedRetries,
    NoActionSelected,
    PlanParseError,
    StepFailed,
    StepLimitExceeded,
    SyntaxError,
    CheckFailed,
    RuntimeToolFailure,
    SchemaError,
    EngineMismatch,
    InvariantViolation,
    UsageError,
};

std::string_view error_code_name(ErrorCode code);

/// Single exception type for the whole framework; the code is the contract,
/// the message is for humans and reports.
class AgentError : public std::runtime_error {
public:
    AgentError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace sealedagent
