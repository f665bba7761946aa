#include "spectral_entropy/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "spectral_entropy/error.hpp"

namespace spectral_entropy {

namespace {

constexpr double kHardNegative = -1e-6;

// Neumaier-compensated sum; spectra of a few thousand entries lose several
// digits with plain accumulation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

void require_laplacian(const Spectrum& s, std::string_view what) {
  if (s.kind != MatrixKind::Laplacian) {
    throw Error(ErrorCode::UnsupportedCombination,
                std::string(what) + " is only defined for Laplacian spectra");
  }
}

void append_repeated(std::vector<double>& out, double value, std::size_t count) {
  out.insert(out.end(), count, value);
}

}  // namespace

std::string_view to_string(SpectrumSource source) {
  switch (source) {
    case SpectrumSource::Numeric: return "numeric";
    case SpectrumSource::ClosedForm: return "closed-form";
    case SpectrumSource::ProductFormula: return "product-formula";
  }
  return "unknown";
}

double Spectrum::trace() const {
  CompensatedSum sum;
  for (double v : values) sum.add(v);
  return sum.value();
}

Spectrum make_spectrum(std::vector<double> values, MatrixKind kind, SpectrumSource source,
                       double tol) {
  for (double& v : values) {
    if (v < kHardNegative) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "eigenvalue " << v << " of a positive semidefinite matrix";
      throw Error(ErrorCode::NotPositiveSemidefinite, msg.str());
    }
    if (v < tol) v = 0.0;
  }
  std::sort(values.begin(), values.end());
  return Spectrum{std::move(values), kind, source};
}

Spectrum eig_symmetric(const SquareMatrix& m, MatrixKind kind, double tol) {
  auto result = jacobi_eigenvalues(m, tol);
  return make_spectrum(std::move(result.eigenvalues), kind, SpectrumSource::Numeric, tol);
}

DensitySpectrum density_spectrum(const Spectrum& s, std::size_t edge_count) {
  if (edge_count == 0) {
    throw Error(ErrorCode::EmptyGraph, "density matrix needs at least one edge");
  }
  const double d = 2.0 * static_cast<double>(edge_count);
  DensitySpectrum ds;
  ds.probs.reserve(s.size());
  CompensatedSum total;
  for (double v : s.values) {
    ds.probs.push_back(v / d);
    total.add(v / d);
  }
  if (std::abs(total.value() - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "spectrum trace " << s.trace() << " does not match 2m = " << d;
    throw Error(ErrorCode::InvalidParameter, msg.str());
  }
  std::sort(ds.probs.begin(), ds.probs.end());
  return ds;
}

double moment_sum(const DensitySpectrum& ds, double q) {
  if (!(q > 0.0)) throw Error(ErrorCode::NonPositiveQ, "moment order must be positive");
  if (q == 1.0) return 1.0;  // trace of a density matrix
  CompensatedSum sum;
  for (double g : ds.probs)
    if (g > 0.0) sum.add(std::pow(g, q));
  return sum.value();
}

double raw_moment_sum(const Spectrum& s, double q) {
  if (!(q > 0.0)) throw Error(ErrorCode::NonPositiveQ, "moment order must be positive");
  CompensatedSum sum;
  for (double v : s.values)
    if (v > 0.0) sum.add(std::pow(v, q));
  return sum.value();
}

Spectrum closed_form_spectrum(const FamilySpec& family, MatrixKind kind) {
  validate(family);
  const double pi = std::numbers::pi;
  std::vector<double> values;
  switch (family.kind) {
    case FamilyKind::Cycle: {
      const double sign = kind == MatrixKind::Laplacian ? -1.0 : 1.0;
      const auto n = static_cast<double>(family.n);
      for (std::size_t j = 0; j < family.n; ++j)
        values.push_back(2.0 + sign * 2.0 * std::cos(2.0 * pi * static_cast<double>(j) / n));
      break;
    }
    case FamilyKind::Path: {
      // The printed form 2 - cos(pi j / n) has trace 2n - 1, but L(P_n) has
      // trace 2(n - 1); 2 - 2cos(pi j / n) sums correctly and matches the
      // eigensolver. P_n is bipartite, so Q shares the multiset.
      const auto n = static_cast<double>(family.n);
      for (std::size_t j = 0; j < family.n; ++j)
        values.push_back(2.0 - 2.0 * std::cos(pi * static_cast<double>(j) / n));
      break;
    }
    case FamilyKind::Complete: {
      const auto n = static_cast<double>(family.n);
      if (kind == MatrixKind::Laplacian) {
        values.push_back(0.0);
        append_repeated(values, n, family.n - 1);
      } else {
        values.push_back(2.0 * (n - 1.0));
        append_repeated(values, n - 2.0, family.n - 1);
      }
      break;
    }
    case FamilyKind::CompleteBipartite: {
      if (kind != MatrixKind::Laplacian) {
        throw Error(ErrorCode::UnsupportedCombination,
                    "closed-form signless spectrum of K_{p,q} is not provided");
      }
      // Vectors summing to zero on the p-side see degree q, and vice versa.
      const auto p = static_cast<double>(family.p);
      const auto q = static_cast<double>(family.q);
      values.push_back(0.0);
      append_repeated(values, q, family.p - 1);
      append_repeated(values, p, family.q - 1);
      values.push_back(p + q);
      break;
    }
    case FamilyKind::ErdosRenyi:
      throw Error(ErrorCode::UnsupportedCombination, "random graphs have no closed form");
  }
  return make_spectrum(std::move(values), kind, SpectrumSource::ClosedForm);
}

ProductContext ProductContext::from_graphs(const Graph& g1, const Graph& g2) {
  return {regularity(g1), regularity(g2), g1.degrees()};
}

std::pair<double, double> corona_roots(double x, std::size_t n) {
  const double b = x + static_cast<double>(n) + 1.0;
  const double disc = std::sqrt(std::max(0.0, b * b - 4.0 * x));
  // The larger root is computed directly; the smaller from the product of
  // the roots (= x) to avoid cancellation.
  const double large = 0.5 * (b + disc);
  const double small = x == 0.0 ? 0.0 : x / large;
  return {small, large};
}

Spectrum product_spectrum(const Spectrum& s1, const Spectrum& s2, ProductKind kind,
                          const ProductContext& context) {
  require_laplacian(s1, "product_spectrum");
  require_laplacian(s2, "product_spectrum");
  const std::size_t n1 = s1.size();
  const std::size_t n2 = s2.size();
  std::vector<double> values;
  values.reserve(product_vertex_count(n1, n2, kind));

  auto regularities = [&]() -> std::pair<double, double> {
    if (!context.regularity1 || !context.regularity2) {
      throw Error(ErrorCode::RegularityRequired,
                  std::string(to_string(kind)) + " spectrum needs both factors regular");
    }
    return {static_cast<double>(*context.regularity1),
            static_cast<double>(*context.regularity2)};
  };

  switch (kind) {
    case ProductKind::Cartesian:
      for (double a : s1.values)
        for (double b : s2.values) values.push_back(a + b);
      break;
    case ProductKind::Kronecker: {
      const auto [k, s] = regularities();
      for (double a : s1.values)
        for (double b : s2.values) values.push_back(k * b + s * a - a * b);
      break;
    }
    case ProductKind::Strong: {
      // The displayed form; an inline variant ending "- l1 + l2" is a typo
      // (it fails the trace identity).
      const auto [k, s] = regularities();
      for (double a : s1.values)
        for (double b : s2.values) values.push_back((1.0 + s) * a + (1.0 + k) * b - a * b);
      break;
    }
    case ProductKind::Lexicographic: {
      if (context.degrees1.size() != n1) {
        throw Error(ErrorCode::MissingAux, "lexicographic spectrum needs the degrees of G1");
      }
      const auto scale = static_cast<double>(n2);
      for (double a : s1.values) values.push_back(a * scale);
      for (std::size_t j = 1; j < n2; ++j)
        for (std::size_t d : context.degrees1)
          values.push_back(s2.values[j] + static_cast<double>(d) * scale);
      break;
    }
    case ProductKind::Corona:
      for (double a : s1.values) {
        const auto [lo, hi] = corona_roots(a, n2);
        values.push_back(lo);
        values.push_back(hi);
      }
      for (std::size_t j = 1; j < n2; ++j) append_repeated(values, s2.values[j] + 1.0, n1);
      break;
  }
  return make_spectrum(std::move(values), MatrixKind::Laplacian, SpectrumSource::ProductFormula);
}

Spectrum corona_graph_spectrum(const Spectrum& seed_spectrum, std::size_t n,
                               std::size_t iterations, std::size_t cap) {
  require_laplacian(seed_spectrum, "corona_graph_spectrum");
  if (seed_spectrum.size() != n || n == 0) {
    throw Error(ErrorCode::InvalidParameter, "seed spectrum must have n entries");
  }
  if (iterations == 0) {
    throw Error(ErrorCode::InvalidParameter, "corona graph spectrum needs m >= 1");
  }
  const std::size_t total = corona_vertex_count(n, iterations, cap);

  // Applies f (both roots) `depth` times to every value in `level`.
  auto expand = [n](std::vector<double> level, std::size_t depth) {
    for (std::size_t step = 0; step < depth; ++step) {
      std::vector<double> next;
      next.reserve(level.size() * 2);
      for (double x : level) {
        const auto [lo, hi] = corona_roots(x, n);
        next.push_back(lo);
        next.push_back(hi);
      }
      level = std::move(next);
    }
    return level;
  };

  std::vector<double> values;
  values.reserve(total);
  const auto top = expand(seed_spectrum.values, iterations);
  values.insert(values.end(), top.begin(), top.end());

  const std::vector<double> shifted = [&] {
    std::vector<double> out;
    for (std::size_t i = 1; i < n; ++i) out.push_back(seed_spectrum.values[i] + 1.0);
    return out;
  }();
  for (std::size_t j = 0; j < iterations; ++j) {
    // n (n + 1)^(m - j - 1) copies of each f^j(lambda_i + 1).
    std::size_t multiplicity = n;
    for (std::size_t k = 0; k + j + 1 < iterations; ++k) multiplicity *= n + 1;
    for (double x : expand(shifted, j)) append_repeated(values, x, multiplicity);
  }

  if (values.size() != total) {
    throw Error(ErrorCode::InvalidParameter, "corona spectrum bookkeeping mismatch");
  }
  return make_spectrum(std::move(values), MatrixKind::Laplacian, SpectrumSource::ProductFormula);
}

CheckedSpectrum checked_corona_graph_spectrum(const Graph& seed, std::size_t iterations,
                                              std::size_t validation_limit, std::size_t cap,
                                              double agreement_tol) {
  const auto seed_spectrum = numeric_spectrum(seed, MatrixKind::Laplacian);
  CheckedSpectrum out{
      corona_graph_spectrum(seed_spectrum, seed.vertex_count(), iterations, cap), false, 0.0,
      std::nullopt};
  if (out.spectrum.size() > validation_limit) return out;

  const auto numeric = numeric_spectrum(corona_iterate(seed, iterations, cap),
                                        MatrixKind::Laplacian);
  out.validated = true;
  out.max_deviation = max_abs_deviation(out.spectrum.values, numeric.values);
  if (out.max_deviation > agreement_tol) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "recursive corona spectrum deviates from eigensolve by " << out.max_deviation
        << "; using numeric spectrum";
    out.diagnostic = msg.str();
    out.spectrum = numeric;
  }
  return out;
}

double max_abs_deviation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace spectral_entropy
