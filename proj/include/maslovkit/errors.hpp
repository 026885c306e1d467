#pragma once

#include <stdexcept>
#include <string>

namespace maslovkit {

/// Machine-readable error categories. The CLI reports `code_name()` verbatim.
enum class ErrorCode {
    DivisionByZero,
    RingMismatch,
    DomainError,
    ShapeError,
    UnsupportedRing,
    DegenerateForm,
    FormError,
    NotAUnit,
    NotALoop,
    DegenerateInput,
    EndpointRoot,
    InternalInvariantViolation,
    ParseError,
};

const char* code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
    throw Error(code, detail);
}

}  // namespace maslovkit
