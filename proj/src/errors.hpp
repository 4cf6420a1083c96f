// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lfm {

enum class ErrorCode {
  InvalidArgument = 1,
  Domain = 2,
  Precision = 3,
  Io = 4,
  Internal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::InvalidArgument, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

// Raised when a numerical target cannot be met at the requested precision.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, double achievable_digits)
      : Error(ErrorCode::Precision, what), digits_(achievable_digits) {}
  double achievable_digits() const noexcept { return digits_; }

 private:
  double digits_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::Io, what) {}
};

}  // namespace lfm
