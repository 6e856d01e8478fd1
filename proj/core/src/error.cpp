#include "mcsp/error.hpp"

namespace mcsp {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::UnknownSymbol: return "unknown_symbol";
    case ErrorCode::ArityMismatch: return "arity_mismatch";
    case ErrorCode::ElementOutOfRange: return "element_out_of_range";
    case ErrorCode::VariableOutOfRange: return "variable_out_of_range";
    case ErrorCode::SignatureMismatch: return "signature_mismatch";
    case ErrorCode::EmptyList: return "empty_list";
    case ErrorCode::SizeMismatch: return "size_mismatch";
    case ErrorCode::NotClosed: return "not_closed";
    case ErrorCode::NotCongruence: return "not_congruence";
    case ErrorCode::NotTwoSemilattice: return "not_two_semilattice";
    case ErrorCode::BoundExceeded: return "bound_exceeded";
    case ErrorCode::PreconditionFailed: return "precondition_failed";
    case ErrorCode::NoApplicableCase: return "no_applicable_case";
    case ErrorCode::HypothesisRefused: return "hypothesis_refused";
    case ErrorCode::InternalInconsistency: return "internal_inconsistency";
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::UnknownFixture: return "unknown_fixture";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string & message) :
    std::runtime_error(std::string(to_string(code)) + ": " + message),
    code_(code)
{
}

void fail(ErrorCode code, const std::string & message)
{
    throw Error(code, message);
}

} // namespace mcsp
