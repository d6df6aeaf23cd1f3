#ifndef HILBERT_ERROR_HPP
#define HILBERT_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbert {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotPositiveDefinite,
  CycleLimit,
  Unbounded,
  EmptyInterior,
  ZeroGradient,
  ZeroDirection,
  NotInterior,
  NoConvergence,
  NegativeRadius,
  DegenerateSegment,
  UnsupportedDimension,
  DegenerateGradients,
  TooManyFacets,
  ParseError,
  SizeLimit,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The message is prefixed with the
/// error name so that front-ends can surface it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }

  /// Facet index for ZeroGradient, otherwise empty.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace hilbert

#endif  // HILBERT_ERROR_HPP
