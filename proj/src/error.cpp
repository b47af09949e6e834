#include "wmsudoku/error.hpp"

namespace wmsudoku {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::BadChar: return "BadChar";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::CellFilled: return "CellFilled";
    case ErrorCode::ContradictionFound: return "ContradictionFound";
    case ErrorCode::ZeroCapacity: return "ZeroCapacity";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::EmptySociety: return "EmptySociety";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::BadSkillCode: return "BadSkillCode";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::BadArgs: return "BadArgs";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace wmsudoku
