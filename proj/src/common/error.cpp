#include "common/error.hpp"

namespace lsym {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::KappaVanishes: return "KappaVanishes";
    case ErrorCode::MalformedMatrix: return "MalformedMatrix";
    case ErrorCode::NotSubtractionFree: return "NotSubtractionFree";
    case ErrorCode::NonPartitionWeight: return "NonPartitionWeight";
    case ErrorCode::SearchFailure: return "SearchFailure";
    case ErrorCode::CarrierNotEmptied: return "CarrierNotEmptied";
    case ErrorCode::NotUniUpperTriangular: return "NotUniUpperTriangular";
    case ErrorCode::NoRealFactorization: return "NoRealFactorization";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
  }
  return "Unknown";
}

}  // namespace lsym
