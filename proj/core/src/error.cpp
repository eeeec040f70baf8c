#include "fracindex/error.hpp"

namespace fracindex {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kModelMismatch: return "model-mismatch";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kSchema: return "schema";
    case ErrorCode::kOddDegree: return "odd-degree";
    case ErrorCode::kDegreeMismatch: return "degree-mismatch";
    case ErrorCode::kTruncation: return "truncation";
    case ErrorCode::kZeroPairing: return "zero-pairing";
    case ErrorCode::kNonAssociative: return "non-associative";
    case ErrorCode::kBasisOverflow: return "basis-overflow";
    case ErrorCode::kInsufficientOrder: return "insufficient-order";
    case ErrorCode::kUnknownName: return "unknown-name";
    case ErrorCode::kNotComplex: return "not-complex";
    case ErrorCode::kEllipticity: return "ellipticity";
    case ErrorCode::kWindow: return "window";
    case ErrorCode::kGridTooCoarse: return "grid-too-coarse";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace fracindex
