#ifndef SKISIM_ERRORS_HPP
#define SKISIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skisim {

enum class ErrorCode {
    DuplicateId,
    DanglingEndpoint,
    NotStronglyConnected,
    NonDescendingSlope,
    NonAscendingLift,
    InvalidParameter,
    EmptyCollection,
    EmptyDemand,
    InfeasibleSegments,
    WindowOutsideDay,
    EmptyGeometry,
    UnmappedLift,
    MismatchedSteps,
    ConflictingEdits,
    UnknownEntity,
    ParseError,
    Unreachable,
    StalledAgent,
    IoError,
};

const char* error_code_name(ErrorCode code);

/// Input or configuration rejected before any simulation work starts.
/// Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    ValidationError(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Failure while running a simulation or calibration. Maps to CLI exit code 3.
class EngineError : public std::runtime_error {
public:
    EngineError(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace skisim

#endif
