#pragma once

#include <string_view>

#include "spectral_entropy/spectrum.hpp"

namespace spectral_entropy {

inline constexpr double kDefaultLimitTolerance = 1e-9;

enum class EntropyFamily { SharmaMittal, Renyi, Tsallis, VonNeumann };

std::string_view to_string(EntropyFamily family);

/// Accepts sm, renyi, tsallis, vn and the long names.
EntropyFamily parse_entropy_family(std::string_view text);

struct EntropyParams {
  EntropyFamily family = EntropyFamily::SharmaMittal;
  double q = 2.0;
  double r = 2.0;
  double limit_tol = kDefaultLimitTolerance;
};

// All logarithms are base 2.

/// H_{q,r} = ((S_q)^((1-r)/(1-q)) - 1) / (1 - r).
///
/// Throws NonPositiveQ for q <= 0 and ParameterAtLimit when q or r is within
/// limit_tol of 1; callers wanting the limits should go through entropy().
double sharma_mittal(const DensitySpectrum& ds, double q, double r,
                     double limit_tol = kDefaultLimitTolerance);

/// log2(S_q) / (1 - q).
double renyi(const DensitySpectrum& ds, double q, double limit_tol = kDefaultLimitTolerance);

/// (S_q - 1) / (1 - q).
double tsallis(const DensitySpectrum& ds, double q, double limit_tol = kDefaultLimitTolerance);

/// -sum gamma log2 gamma, with 0 log 0 = 0.
double von_neumann(const DensitySpectrum& ds);

/// The Sharma-Mittal transform of a moment sum; shared with the bounds.
double sharma_mittal_from_moment(double moment, double q, double r);

/// Family actually evaluated for p. Sharma-Mittal requests are routed:
/// (q, r) near (1, 1) -> von Neumann, r near 1 -> Renyi, r near q -> Tsallis.
/// Explicit families are returned unchanged.
EntropyFamily routed_family(const EntropyParams& p);

double entropy(const DensitySpectrum& ds, const EntropyParams& p);

}  // namespace spectral_entropy
