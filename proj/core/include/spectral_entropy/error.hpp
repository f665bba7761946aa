#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spectral_entropy {

enum class ErrorCode {
  ParseError,
  IndexOutOfRange,
  SelfLoop,
  InvalidCount,
  InvalidParameter,
  SizeCapExceeded,
  NotSymmetric,
  NotPositiveSemidefinite,
  NoConvergence,
  EmptyGraph,
  NonPositiveQ,
  UnsupportedCombination,
  RegularityRequired,
  MissingAux,
  ParameterAtLimit,
  NotRegular,
  NotBipartite,
  NotConnected,
  TooSmall,
  TooLarge,
  TooManyEdges,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// front ends can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spectral_entropy
