#include "gconf/error.hpp"

namespace gconf {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OriginAnchor: return "OriginAnchor";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::NonPositiveRadius: return "NonPositiveRadius";
    case ErrorCode::DuplicateCenters: return "DuplicateCenters";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidFamilyParams: return "InvalidFamilyParams";
    case ErrorCode::WeightCountMismatch: return "WeightCountMismatch";
    case ErrorCode::GraphTooLarge: return "GraphTooLarge";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::DegenerateType: return "DegenerateType";
    case ErrorCode::NegativeRadius: return "NegativeRadius";
    case ErrorCode::InvalidDim: return "InvalidDim";
    case ErrorCode::UnsupportedMode: return "UnsupportedMode";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ZeroWeightInDotMode: return "ZeroWeightInDotMode";
    case ErrorCode::UnsupportedSemantics: return "UnsupportedSemantics";
    case ErrorCode::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::ZeroCount: return "ZeroCount";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace gconf
