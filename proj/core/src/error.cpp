#include "hilbert/error.hpp"

namespace hilbert {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::CycleLimit: return "CycleLimit";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::EmptyInterior: return "EmptyInterior";
    case ErrorCode::ZeroGradient: return "ZeroGradient";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NegativeRadius: return "NegativeRadius";
    case ErrorCode::DegenerateSegment: return "DegenerateSegment";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::DegenerateGradients: return "DegenerateGradients";
    case ErrorCode::TooManyFacets: return "TooManyFacets";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SizeLimit: return "SizeLimit";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& detail,
                           std::optional<std::size_t> index) {
  std::string msg(to_string(code));
  if (index) msg += "(" + std::to_string(*index) + ")";
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& detail,
             std::optional<std::size_t> index)
    : std::runtime_error(format_message(code, detail, index)),
      code_(code),
      index_(index) {}

}  // namespace hilbert
