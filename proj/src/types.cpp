#include "skisim/types.hpp"

#include "skisim/errors.hpp"

namespace skisim {

NodeKind parse_node_kind(const std::string& s) {
    if (s == "junction") return NodeKind::Junction;
    if (s == "generator") return NodeKind::Generator;
    if (s == "restaurant") return NodeKind::Restaurant;
    throw ValidationError(ErrorCode::ParseError, "unknown node kind: " + s);
}

SlopeColor parse_color(const std::string& s) {
    if (s == "green") return SlopeColor::Green;
    if (s == "blue") return SlopeColor::Blue;
    if (s == "red") return SlopeColor::Red;
    if (s == "black") return SlopeColor::Black;
    throw ValidationError(ErrorCode::ParseError, "unknown slope color: " + s);
}

Level parse_level(const std::string& s) {
    if (s == "beginner") return Level::Beginner;
    if (s == "medium") return Level::Medium;
    if (s == "good") return Level::Good;
    if (s == "expert") return Level::Expert;
    throw ValidationError(ErrorCode::ParseError, "unknown ability level: " + s);
}

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Junction: return "junction";
        case NodeKind::Generator: return "generator";
        case NodeKind::Restaurant: return "restaurant";
    }
    return "?";
}

const char* to_string(SlopeColor color) {
    switch (color) {
        case SlopeColor::Green: return "green";
        case SlopeColor::Blue: return "blue";
        case SlopeColor::Red: return "red";
        case SlopeColor::Black: return "black";
    }
    return "?";
}

const char* to_string(Level level) {
    switch (level) {
        case Level::Beginner: return "beginner";
        case Level::Medium: return "medium";
        case Level::Good: return "good";
        case Level::Expert: return "expert";
    }
    return "?";
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
        case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
        case ErrorCode::NonDescendingSlope: return "NonDescendingSlope";
        case ErrorCode::NonAscendingLift: return "NonAscendingLift";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::EmptyCollection: return "EmptyCollection";
        case ErrorCode::EmptyDemand: return "EmptyDemand";
        case ErrorCode::InfeasibleSegments: return "InfeasibleSegments";
        case ErrorCode::WindowOutsideDay: return "WindowOutsideDay";
        case ErrorCode::EmptyGeometry: return "EmptyGeometry";
        case ErrorCode::UnmappedLift: return "UnmappedLift";
        case ErrorCode::MismatchedSteps: return "MismatchedSteps";
        case ErrorCode::ConflictingEdits: return "ConflictingEdits";
        case ErrorCode::UnknownEntity: return "UnknownEntity";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Unreachable: return "Unreachable";
        case ErrorCode::StalledAgent: return "StalledAgent";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace skisim
