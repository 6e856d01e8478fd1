#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcsp {

// Machine-readable failure categories. The CLI prints these names verbatim.
enum class ErrorCode {
    UnknownSymbol,
    ArityMismatch,
    ElementOutOfRange,
    VariableOutOfRange,
    SignatureMismatch,
    EmptyList,
    SizeMismatch,
    NotClosed,
    NotCongruence,
    NotTwoSemilattice,
    BoundExceeded,
    PreconditionFailed,
    NoApplicableCase,
    HypothesisRefused,
    InternalInconsistency,
    ParseError,
    UnknownFixture,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string & message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string & message);

} // namespace mcsp
