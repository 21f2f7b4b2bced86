#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dwrad {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// An operator S (or T, R, B, C) acting on C^n. Plain dense matrix; the
// weight it is paired with is always passed alongside.
using Operator = Matrix;

enum class ErrorCode {
  NotHermitian,
  NotPSD,
  ZeroWeight,
  DimensionMismatch,
  NotInBA,
  InvalidParam,
  UnknownBoundId,
  NotUnitVector,
  NotAPositive,
  NotAUnitary,
  ParseError,
  ConfigError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dwrad
