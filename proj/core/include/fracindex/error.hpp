#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fracindex {

enum class ErrorCode {
  kModelMismatch,
  kDomain,
  kParse,
  kSchema,
  kOddDegree,
  kDegreeMismatch,
  kTruncation,
  kZeroPairing,
  kNonAssociative,
  kBasisOverflow,
  kInsufficientOrder,
  kUnknownName,
  kNotComplex,
  kEllipticity,
  kWindow,
  kGridTooCoarse,
  kInternal,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library surfaces as this exception. The code
/// distinguishes the diagnostic class, the message carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fracindex
