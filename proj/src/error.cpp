#include "tropskel/error.hpp"

namespace tropskel {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::EmptyInput: return "EMPTY_INPUT";
    case ErrorCode::PointNotInPolyhedron: return "POINT_NOT_IN_POLYHEDRON";
    case ErrorCode::PointNotInSupport: return "POINT_NOT_IN_SUPPORT";
    case ErrorCode::NotPointed: return "NOT_POINTED";
    case ErrorCode::NotAFan: return "NOT_A_FAN";
    case ErrorCode::UnknownCone: return "UNKNOWN_CONE";
    case ErrorCode::UnknownCell: return "UNKNOWN_CELL";
    case ErrorCode::TooFewTerms: return "TOO_FEW_TERMS";
    case ErrorCode::OrbitPointUnsupported: return "ORBIT_POINT_UNSUPPORTED";
    case ErrorCode::NotEquidimensional: return "NOT_EQUIDIMENSIONAL";
    case ErrorCode::MissingStratumData: return "MISSING_STRATUM_DATA";
    case ErrorCode::BasePointMismatch: return "BASE_POINT_MISMATCH";
    case ErrorCode::DataInconsistent: return "DATA_INCONSISTENT";
    case ErrorCode::MissingInclusion: return "MISSING_INCLUSION";
    case ErrorCode::NotGraded: return "NOT_GRADED";
    case ErrorCode::IndexInfinite: return "INDEX_INFINITE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::InvalidInput: return "INVALID_INPUT";
    case ErrorCode::InternalInconsistency: return "INTERNAL_INCONSISTENCY";
  }
  return "UNKNOWN_ERROR";
}

}  // namespace tropskel
