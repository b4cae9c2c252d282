#include "nlgate/errors.hpp"

namespace nlgate {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateQubit: return "DuplicateQubit";
    case ErrorCode::UnknownQubit: return "UnknownQubit";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RegisterMismatch: return "RegisterMismatch";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::SameNode: return "SameNode";
    case ErrorCode::LocalityViolation: return "LocalityViolation";
    case ErrorCode::KnowledgeViolation: return "KnowledgeViolation";
    case ErrorCode::NonUniformCommunication: return "NonUniformCommunication";
    case ErrorCode::NotNonlocal: return "NotNonlocal";
    case ErrorCode::BadArity: return "BadArity";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotBellDiagonal: return "NotBellDiagonal";
  }
  return "UnknownError";
}

}  // namespace nlgate
