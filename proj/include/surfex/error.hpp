#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace surfex {

// Every failure raised by the library carries one of these codes. The C API
// maps them onto surfex_status values one-to-one.
enum class ErrorCode {
    MalformedLine,
    DegenerateEdge,
    DuplicateEdge,
    VertexOutOfRange,
    SameVertex,
    SelfLoop,
    EmptyComplex,
    NotAClosedSurface,
    InconsistentChi,
    TooShort,
    RangeViolation,
    NotATopCycle,
    NotThreePartite,
    DisjointnessViolation,
    SphereMissingEdge,
    NotASphere,
    TooLargeForExact,
    NotNeighboring,
    InvalidWitness,
    ColoringIncomplete,
    NotDiverse,
    Overflow,
    TooLarge,
    EmptyResult,
    NotRainbow,
    MissingInterpolant,
    CapExceeded,
    InvalidArgument,
    Io,
    Internal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace surfex
