#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conicpos {

enum class ErrorCode {
    AllZero,
    RoleMismatch,
    DegenerateInput,
    NegativeRadicand,
    NotFinite,
    LeadingZero,
    FieldMismatch,
    DivisionByZero,
    InvalidParams,
    NoCaseMatched,
    PatternUnmatched,
    CommonComponent,
    IndeterminateSign,
    ParseError,
    IoError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::RoleMismatch: return "RoleMismatch";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::LeadingZero: return "LeadingZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NoCaseMatched: return "NoCaseMatched";
    case ErrorCode::PatternUnmatched: return "PatternUnmatched";
    case ErrorCode::CommonComponent: return "CommonComponent";
    case ErrorCode::IndeterminateSign: return "IndeterminateSign";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace conicpos
