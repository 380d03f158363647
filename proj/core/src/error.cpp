#include "hskein/error.hpp"

namespace hskein {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::BadEvaluationPoint: return "BadEvaluationPoint";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::DegreeZeroComponent: return "DegreeZeroComponent";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotDiagonal: return "NotDiagonal";
    case ErrorCode::BadFactorIndex: return "BadFactorIndex";
    case ErrorCode::UnsupportedMixedTerm: return "UnsupportedMixedTerm";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace hskein
