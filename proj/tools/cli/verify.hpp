#pragma once

#include <string>
#include <vector>

#include "spectral_entropy/graph.hpp"

namespace spectral_entropy::cli {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  double deviation = 0.0;  // worst observed error (or violation) for the check
  double tolerance = 0.0;
  std::string detail;
};

/// Two non-isomorphic 8-vertex graphs sharing the L-spectrum
/// {0,0,0,1,1,3,3,4}.
Graph laplacian_cospectral_first();
Graph laplacian_cospectral_second();

/// Triangle plus isolated vertex, and the star K_{1,3}: both have
/// Q-spectrum {0,1,1,4}.
Graph signless_cospectral_first();
Graph signless_cospectral_second();

/// Closed forms, product formulas and the corona recursion against the
/// eigensolver, plus cospectral-pair and S_Q >= S_L checks.
std::vector<VerifyCheck> run_verification(double tol = 1e-8);

}  // namespace spectral_entropy::cli
