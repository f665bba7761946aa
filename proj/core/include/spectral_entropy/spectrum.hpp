#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectral_entropy/families.hpp"
#include "spectral_entropy/graph.hpp"
#include "spectral_entropy/jacobi.hpp"
#include "spectral_entropy/matrix.hpp"
#include "spectral_entropy/products.hpp"

namespace spectral_entropy {

enum class SpectrumSource { Numeric, ClosedForm, ProductFormula };

std::string_view to_string(SpectrumSource source);

/// Eigenvalues of L(G) or Q(G), ascending, repeated by multiplicity.
struct Spectrum {
  std::vector<double> values;
  MatrixKind kind = MatrixKind::Laplacian;
  SpectrumSource source = SpectrumSource::Numeric;

  std::size_t size() const noexcept { return values.size(); }
  double trace() const;
  double max() const { return values.empty() ? 0.0 : values.back(); }
  double min() const { return values.empty() ? 0.0 : values.front(); }
};

/// Sorts, clamps values in [-1e-6, tol) to zero, and rejects anything below
/// -1e-6 with NotPositiveSemidefinite (both matrices are PSD, so a negative
/// value that large means a bug upstream).
Spectrum make_spectrum(std::vector<double> values, MatrixKind kind, SpectrumSource source,
                       double tol = kDefaultEigenTolerance);

/// Eigenvalues of a symmetric matrix via the cyclic Jacobi solver.
Spectrum eig_symmetric(const SquareMatrix& m, MatrixKind kind,
                       double tol = kDefaultEigenTolerance);

inline Spectrum numeric_spectrum(const Graph& g, MatrixKind kind,
                                 double tol = kDefaultEigenTolerance) {
  return eig_symmetric(graph_matrix(g, kind), kind, tol);
}

/// Eigenvalues of the density matrix rho = M / (2m); a probability vector.
struct DensitySpectrum {
  std::vector<double> probs;

  std::size_t size() const noexcept { return probs.size(); }
};

/// Throws EmptyGraph for m == 0 and InvalidParameter when the spectrum's
/// trace is not 2m (the normalised sum must land within 1e-9 of one).
DensitySpectrum density_spectrum(const Spectrum& s, std::size_t edge_count);

/// Sum of gamma^q over the non-zero entries (0^q = 0). q == 1 returns the
/// trace, which is exactly one. Throws NonPositiveQ for q <= 0.
double moment_sum(const DensitySpectrum& ds, double q);

/// Sum of lambda^q over the raw spectrum, same conventions as moment_sum.
double raw_moment_sum(const Spectrum& s, double q);

/// Analytic spectra of the named families.
///
///   cycle    L: 2 - 2cos(2 pi j / n)       Q: 2 + 2cos(2 pi j / n)
///   complete L: {0, n^(n-1)}               Q: {2(n-1), (n-2)^(n-1)}
///   path     L = Q: 2 - 2cos(pi j / n), j = 0..n-1
///   K_{p,q}  L: {0, q^(p-1), p^(q-1), p+q}
///
/// Throws InvalidParameter for bad sizes and UnsupportedCombination for the
/// signless spectrum of complete bipartite graphs and for er graphs.
Spectrum closed_form_spectrum(const FamilySpec& family, MatrixKind kind);

/// Graph data the product formulas need beyond the two factor spectra.
struct ProductContext {
  std::optional<std::size_t> regularity1;  // Kronecker, Strong
  std::optional<std::size_t> regularity2;  // Kronecker, Strong
  std::vector<std::size_t> degrees1;       // Lexicographic

  static ProductContext from_graphs(const Graph& g1, const Graph& g2);
};

/// L-spectrum of the product from the factor L-spectra.
///
///   Cartesian      l1 + l2
///   Kronecker      K l2 + S l1 - l1 l2                 (K-, S-regular factors)
///   Strong         (1 + S) l1 + (1 + K) l2 - l1 l2     (K-, S-regular factors)
///   Lexicographic  n2 l1_i;  l2_j + n2 d(u_i) for j >= 2
///   Corona         both roots of t^2 - (l1 + n2 + 1) t + l1;  l2_j + 1 (x n1) for j >= 2
///
/// "j >= 2" skips the smallest eigenvalue of the second factor (the zero
/// belonging to the all-ones vector). Throws UnsupportedCombination for
/// Q-spectra, RegularityRequired and MissingAux for absent context.
Spectrum product_spectrum(const Spectrum& s1, const Spectrum& s2, ProductKind kind,
                          const ProductContext& context);

/// Roots of t^2 - (x + n + 1) t + x, ascending.
std::pair<double, double> corona_roots(double x, std::size_t n);

/// L-spectrum of the iterated corona graph G^(m) built from an n-vertex seed
/// with L-spectrum seed_spectrum, m >= 1.
///
/// Unrolling the corona-product spectrum with G2 = seed gives
///   f^m(lambda_i)                 for every seed eigenvalue, and
///   f^j(lambda_i + 1)  x n (n+1)^(m-j-1)  for j = 0..m-1, skipping the
///                                          smallest seed eigenvalue,
/// where f maps x to both corona_roots(x, n), so f^j yields 2^j values.
/// Throws SizeCapExceeded when n (1 + n)^m > cap.
Spectrum corona_graph_spectrum(const Spectrum& seed_spectrum, std::size_t n,
                               std::size_t iterations, std::size_t cap = kDefaultVertexCap);

/// Recursive corona spectrum cross-checked against the eigensolver.
struct CheckedSpectrum {
  Spectrum spectrum;
  bool validated = false;        // an eigensolve was run
  double max_deviation = 0.0;    // formula vs numeric, when validated
  std::optional<std::string> diagnostic;  // set when the numeric result replaced the formula
};

/// Builds G^(m) and eigensolves it whenever the vertex count is at most
/// validation_limit; if the two disagree by more than agreement_tol the
/// numeric spectrum is returned with a diagnostic.
CheckedSpectrum checked_corona_graph_spectrum(const Graph& seed, std::size_t iterations,
                                              std::size_t validation_limit,
                                              std::size_t cap = kDefaultVertexCap,
                                              double agreement_tol = 1e-8);

/// max_i |a_i - b_i| for equally sized sorted lists; +inf on size mismatch.
double max_abs_deviation(std::span<const double> a, std::span<const double> b);

}  // namespace spectral_entropy
