#include "spectral_entropy/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spectral_entropy/error.hpp"

namespace spectral_entropy {

namespace {

double off_diagonal_norm(const SquareMatrix& a) {
  double sum = 0.0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sum += a(i, j) * a(i, j);
  return std::sqrt(2.0 * sum);
}

// Applies the plane rotation to rows/columns p and q, touching only the upper
// triangle.
void rotate(SquareMatrix& a, std::size_t p, std::size_t q, double c, double s) {
  const std::size_t n = a.size();
  for (std::size_t j = 0; j < p; ++j) {
    const double x = a(j, p);
    const double y = a(j, q);
    a(j, p) = c * x - s * y;
    a(j, q) = s * x + c * y;
  }
  for (std::size_t j = p + 1; j < q; ++j) {
    const double x = a(p, j);
    const double y = a(j, q);
    a(p, j) = c * x - s * y;
    a(j, q) = s * x + c * y;
  }
  for (std::size_t j = q + 1; j < n; ++j) {
    const double x = a(p, j);
    const double y = a(q, j);
    a(p, j) = c * x - s * y;
    a(q, j) = s * x + c * y;
  }
}

}  // namespace

JacobiResult jacobi_eigenvalues(SquareMatrix a, double tol) {
  const std::size_t n = a.size();
  if (a.asymmetry() > tol) {
    throw Error(ErrorCode::NotSymmetric, "matrix asymmetry exceeds " + std::to_string(tol));
  }
  // Only the upper triangle is maintained from here on.

  JacobiResult result;
  const std::size_t sweep_cap = std::max<std::size_t>(1, 100 * n * n);
  while (true) {
    result.off_diagonal_norm = off_diagonal_norm(a);
    if (result.off_diagonal_norm < tol) break;
    if (result.sweeps >= sweep_cap) {
      throw Error(ErrorCode::NoConvergence,
                  "off-diagonal norm " + std::to_string(result.off_diagonal_norm) +
                      " after " + std::to_string(result.sweeps) + " sweeps");
    }
    ++result.sweeps;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double g = 100.0 * std::abs(apq);
        // Pivot below the last bit of both diagonal entries.
        if (result.sweeps > 3 && std::abs(app) + g == std::abs(app) &&
            std::abs(aqq) + g == std::abs(aqq)) {
          a(p, q) = 0.0;
          continue;
        }
        const double h = aqq - app;
        double t;
        if (std::abs(h) + g == std::abs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        rotate(a, p, q, c, s);
      }
    }
  }

  result.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.eigenvalues[i] = a(i, i);
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end());
  return result;
}

}  // namespace spectral_entropy
