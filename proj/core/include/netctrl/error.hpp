#ifndef NETCTRL_ERROR_HPP
#define NETCTRL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace netctrl {

enum class ErrorCode {
    IndexOutOfRange,
    SelfLoop,
    SizeTooLarge,
    EmptyFollowerSet,
    InvalidLeader,
    BothZero,
    DegreeTooLarge,
    ModulusMismatch,
    DimensionMismatch,
    ZeroVector,
    DisconnectedGraph,
    SameVertex,
    DuplicateVertex,
    EmptySupport,
    WrongSize,
    WrongTopology,
    InvalidSpec,
    ExhaustedRetries,
    UnknownSuite,
    ParseError,
    InconsistentTests,
};

inline const char* to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::IndexOutOfRange:   return "IndexOutOfRange";
        case ErrorCode::SelfLoop:          return "SelfLoop";
        case ErrorCode::SizeTooLarge:      return "SizeTooLarge";
        case ErrorCode::EmptyFollowerSet:  return "EmptyFollowerSet";
        case ErrorCode::InvalidLeader:     return "InvalidLeader";
        case ErrorCode::BothZero:          return "BothZero";
        case ErrorCode::DegreeTooLarge:    return "DegreeTooLarge";
        case ErrorCode::ModulusMismatch:   return "ModulusMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ZeroVector:        return "ZeroVector";
        case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorCode::SameVertex:        return "SameVertex";
        case ErrorCode::DuplicateVertex:   return "DuplicateVertex";
        case ErrorCode::EmptySupport:      return "EmptySupport";
        case ErrorCode::WrongSize:         return "WrongSize";
        case ErrorCode::WrongTopology:     return "WrongTopology";
        case ErrorCode::InvalidSpec:       return "InvalidSpec";
        case ErrorCode::ExhaustedRetries:  return "ExhaustedRetries";
        case ErrorCode::UnknownSuite:      return "UnknownSuite";
        case ErrorCode::ParseError:        return "ParseError";
        case ErrorCode::InconsistentTests: return "InconsistentTests";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace netctrl

#endif
