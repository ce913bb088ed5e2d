#include "tropjac/error.hpp"

namespace tropjac {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::OutOfRangePosition: return "OutOfRangePosition";
    case ErrorCode::GenusZero: return "GenusZero";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnboundSymbol: return "UnboundSymbol";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::CycleLimitExceeded: return "CycleLimitExceeded";
    case ErrorCode::NotSpanningTree: return "NotSpanningTree";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::IrrationalLength: return "IrrationalLength";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Internal";
}

}  // namespace tropjac
