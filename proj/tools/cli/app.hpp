#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "spectral_entropy/entropy.hpp"
#include "spectral_entropy/error.hpp"
#include "spectral_entropy/graph.hpp"

namespace spectral_entropy::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification failed, numerical failure
inline constexpr int kExitParse = 2;
inline constexpr int kExitEmptyGraph = 3;
inline constexpr int kExitParameter = 4;

int exit_code_for(ErrorCode code);

enum class OutputFormat { Json, Csv, Plain };

OutputFormat parse_output_format(const std::string& text);

/// Where a graph comes from: an edge-list file or a family spec string.
struct GraphSource {
  std::string path;
  std::string spec;

  /// Throws ParseError unless exactly one of path/spec is set.
  Graph load() const;
};

struct RunConfig {
  MatrixKind matrix = MatrixKind::Laplacian;
  EntropyFamily family = EntropyFamily::SharmaMittal;
  double q = 2.0;
  double r = 2.0;
  double tol = kDefaultEigenTolerance;
  OutputFormat output = OutputFormat::Json;

  EntropyParams entropy_params() const { return {family, q, r}; }
};

/// Growth cap for `grow`: SPECTRAL_ENTROPY_VERTEX_CAP if set, else the
/// library default. Throws ParseError on a malformed value.
std::size_t vertex_cap_from_environment();

/// Entry point shared by the executable and the tests. Results go to out,
/// diagnostics and errors to err; the return value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spectral_entropy::cli
