#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mdsconv {

enum class ErrorCode {
    NotPrime,
    ReducibleModulus,
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    NotPrimitive,
    IndexOutOfRange,
    DuplicateRoots,
    DuplicatePoints,
    ZeroMultiplier,
    SearchBudgetExceeded,
    RankDeficient,
    RowCountExceeded,
    PropertyViolation,
    InvalidParams,
    NotMaximalDegreeRow,
    ParityConditionViolated,
    OddFieldSize,
    InternalInvariant,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` distinguishes the failure.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace mdsconv
