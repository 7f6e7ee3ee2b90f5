#include "tifl/error.hpp"

namespace tifl {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PhiOffLimits: return "PhiOffLimits";
    case ErrorCode::DegenerateAlpha: return "DegenerateAlpha";
    case ErrorCode::DuplicateSite: return "DuplicateSite";
    case ErrorCode::DegenerateFrequencies: return "DegenerateFrequencies";
    case ErrorCode::OutsideSphere: return "OutsideSphere";
    case ErrorCode::SurfaceSingularity: return "SurfaceSingularity";
    case ErrorCode::Exterior: return "Exterior";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::EmptyMap: return "EmptyMap";
    case ErrorCode::NonUnitDirection: return "NonUnitDirection";
    case ErrorCode::InfeasibleTarget: return "InfeasibleTarget";
    case ErrorCode::NoSafeMontage: return "NoSafeMontage";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

}  // namespace tifl
