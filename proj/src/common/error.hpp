#pragma once

#include <stdexcept>
#include <string>

namespace lsym {

// Domain failures raised by the core. The C API maps each code onto an
// lsym_status value one-to-one.
enum class ErrorCode {
  InvalidArgument,
  Parse,
  DenominatorVanishes,
  KappaVanishes,
  MalformedMatrix,
  NotSubtractionFree,
  NonPartitionWeight,
  SearchFailure,
  CarrierNotEmptied,
  NotUniUpperTriangular,
  NoRealFactorization,
  NoConvergence,
  DegenerateDenominator,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::InvalidArgument, what);
}

}  // namespace lsym
