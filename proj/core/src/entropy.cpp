#include "spectral_entropy/entropy.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "spectral_entropy/error.hpp"

namespace spectral_entropy {

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

void require_positive_q(double q) {
  if (!(q > 0.0)) throw Error(ErrorCode::NonPositiveQ, "q must be positive");
}

void require_off_limit(double value, std::string_view name, double tol) {
  if (near(value, 1.0, tol)) {
    throw Error(ErrorCode::ParameterAtLimit,
                std::string(name) + " is within the limit tolerance of 1");
  }
}

}  // namespace

std::string_view to_string(EntropyFamily family) {
  switch (family) {
    case EntropyFamily::SharmaMittal: return "sharma_mittal";
    case EntropyFamily::Renyi: return "renyi";
    case EntropyFamily::Tsallis: return "tsallis";
    case EntropyFamily::VonNeumann: return "von_neumann";
  }
  return "unknown";
}

EntropyFamily parse_entropy_family(std::string_view text) {
  std::string key(text);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (key == "sm" || key == "sharma_mittal" || key == "sharma-mittal") {
    return EntropyFamily::SharmaMittal;
  }
  if (key == "renyi") return EntropyFamily::Renyi;
  if (key == "tsallis") return EntropyFamily::Tsallis;
  if (key == "vn" || key == "von_neumann" || key == "von-neumann") {
    return EntropyFamily::VonNeumann;
  }
  throw Error(ErrorCode::ParseError, "unknown entropy family '" + std::string(text) + "'");
}

double sharma_mittal_from_moment(double moment, double q, double r) {
  return (std::pow(moment, (1.0 - r) / (1.0 - q)) - 1.0) / (1.0 - r);
}

double sharma_mittal(const DensitySpectrum& ds, double q, double r, double limit_tol) {
  require_positive_q(q);
  require_off_limit(q, "q", limit_tol);
  require_off_limit(r, "r", limit_tol);
  return sharma_mittal_from_moment(moment_sum(ds, q), q, r);
}

double renyi(const DensitySpectrum& ds, double q, double limit_tol) {
  require_positive_q(q);
  require_off_limit(q, "q", limit_tol);
  return std::log2(moment_sum(ds, q)) / (1.0 - q);
}

double tsallis(const DensitySpectrum& ds, double q, double limit_tol) {
  require_positive_q(q);
  require_off_limit(q, "q", limit_tol);
  return (moment_sum(ds, q) - 1.0) / (1.0 - q);
}

double von_neumann(const DensitySpectrum& ds) {
  double h = 0.0;
  for (double g : ds.probs)
    if (g > 0.0) h -= g * std::log2(g);
  return h;
}

EntropyFamily routed_family(const EntropyParams& p) {
  if (!(p.limit_tol > 0.0)) {
    throw Error(ErrorCode::InvalidParameter, "limit tolerance must be positive");
  }
  if (p.family != EntropyFamily::SharmaMittal) return p.family;
  if (near(p.q, 1.0, p.limit_tol) && near(p.r, 1.0, p.limit_tol)) {
    return EntropyFamily::VonNeumann;
  }
  if (near(p.r, 1.0, p.limit_tol)) return EntropyFamily::Renyi;
  if (near(p.r, p.q, p.limit_tol)) return EntropyFamily::Tsallis;
  return EntropyFamily::SharmaMittal;
}

double entropy(const DensitySpectrum& ds, const EntropyParams& p) {
  switch (routed_family(p)) {
    case EntropyFamily::SharmaMittal: return sharma_mittal(ds, p.q, p.r, p.limit_tol);
    case EntropyFamily::Renyi: return renyi(ds, p.q, p.limit_tol);
    case EntropyFamily::Tsallis: return tsallis(ds, p.q, p.limit_tol);
    case EntropyFamily::VonNeumann: return von_neumann(ds);
  }
  return 0.0;
}

}  // namespace spectral_entropy
