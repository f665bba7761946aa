#pragma once

#include <cstddef>
#include <vector>

#include "spectral_entropy/matrix.hpp"

namespace spectral_entropy {

inline constexpr double kDefaultEigenTolerance = 1e-10;

struct JacobiResult {
  std::vector<double> eigenvalues;  // ascending
  std::size_t sweeps = 0;
  double off_diagonal_norm = 0.0;
};

/// Cyclic Jacobi rotation method for a real symmetric matrix.
///
/// Sweeps over the strict upper triangle in row order until the off-diagonal
/// Frobenius norm drops below tol. Rotations whose pivot is negligible next
/// to both diagonal entries are replaced by zeroing the pivot, so matrices
/// with large norms still terminate. Deterministic for a given input.
///
/// Throws NotSymmetric if |a_ij - a_ji| > tol anywhere and NoConvergence
/// after 100 n^2 sweeps.
JacobiResult jacobi_eigenvalues(SquareMatrix a, double tol = kDefaultEigenTolerance);

}  // namespace spectral_entropy
