#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pushforward {

using Int = std::int64_t;

enum class ErrorCode {
    kEmptySplitting,
    kInvalidSequence,
    kNegativeSecondDifference,
    kRankMismatch,
    kInvalidDegree,
    kMissingFlag,
    kExcessFlag,
    kNegativeH1,
    kOverfull,
    kOutOfScope,
    kPointNotOnCurve,
    kCharacteristicTwo,
    kSingularCurve,
    kInvalidCurve,
    kWrongGenus,
    kDegreeNotMultiple,
    kParse,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::kEmptySplitting: return "EmptySplitting";
        case ErrorCode::kInvalidSequence: return "InvalidSequence";
        case ErrorCode::kNegativeSecondDifference: return "NegativeSecondDifference";
        case ErrorCode::kRankMismatch: return "RankMismatch";
        case ErrorCode::kInvalidDegree: return "InvalidDegree";
        case ErrorCode::kMissingFlag: return "MissingFlag";
        case ErrorCode::kExcessFlag: return "ExcessFlag";
        case ErrorCode::kNegativeH1: return "NegativeH1";
        case ErrorCode::kOverfull: return "Overfull";
        case ErrorCode::kOutOfScope: return "OutOfScope";
        case ErrorCode::kPointNotOnCurve: return "PointNotOnCurve";
        case ErrorCode::kCharacteristicTwo: return "CharacteristicTwo";
        case ErrorCode::kSingularCurve: return "SingularCurve";
        case ErrorCode::kInvalidCurve: return "InvalidCurve";
        case ErrorCode::kWrongGenus: return "WrongGenus";
        case ErrorCode::kDegreeNotMultiple: return "DegreeNotMultiple";
        case ErrorCode::kParse: return "Parse";
    }
    return "Unknown";
}

/// Every failure in the library is reported through this type; `code()`
/// identifies the violated precondition, `what()` carries the detail.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Floor division; the C++ operator truncates toward zero.
constexpr Int floor_div(Int a, Int b) noexcept {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

constexpr Int floor_mod(Int a, Int b) noexcept { return a - floor_div(a, b) * b; }

}  // namespace pushforward
