#include "wsnacc/error.hpp"

namespace wsnacc {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::DegenerateWindow: return "DegenerateWindow";
        case ErrorCode::OutOfField: return "OutOfField";
        case ErrorCode::NoHeads: return "NoHeads";
        case ErrorCode::UnknownNode: return "UnknownNode";
        case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorCode::MissingTracingPoint: return "MissingTracingPoint";
        case ErrorCode::NoPlateau: return "NoPlateau";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::PropertyViolation: return "PropertyViolation";
    }
    return "Unknown";
}

}  // namespace wsnacc
