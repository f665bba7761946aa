#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "spectral_entropy/error.hpp"
#include "spectral_entropy/families.hpp"
#include "spectral_entropy/jacobi.hpp"
#include "spectral_entropy/products.hpp"
#include "spectral_entropy/spectrum.hpp"

namespace se = spectral_entropy;
using se::ErrorCode;
using se::MatrixKind;
using se::ProductKind;

namespace {

void expect_values(const std::vector<double>& actual, const std::vector<double>& expected,
                   double tol) {
  ASSERT_EQ(actual.size(), expected.size());
  for (std::size_t i = 0; i < actual.size(); ++i) EXPECT_NEAR(actual[i], expected[i], tol) << i;
}

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const se::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

se::Spectrum spectrum_of(std::vector<double> v) {
  return se::make_spectrum(std::move(v), MatrixKind::Laplacian, se::SpectrumSource::Numeric);
}

}  // namespace

TEST(Jacobi, SmallSpectra) {
  expect_values(se::numeric_spectrum(se::generate("complete:2"), MatrixKind::Laplacian).values,
                {0, 2}, 1e-12);
  expect_values(se::numeric_spectrum(se::generate("cycle:4"), MatrixKind::Laplacian).values,
                {0, 2, 2, 4}, 1e-12);
  const std::vector<se::Edge> edges{{0, 1}, {1, 2}, {4, 5}, {5, 6}, {5, 3}, {4, 6}};
  expect_values(se::numeric_spectrum(se::Graph::build(8, edges), MatrixKind::Laplacian).values,
                {0, 0, 0, 1, 1, 3, 3, 4}, 1e-10);
}

TEST(Jacobi, AgreesWithEigenOnCorpus) {
  for (const auto& g : oracle::corpus(10, 80, 25)) {
    for (auto kind : {MatrixKind::Laplacian, MatrixKind::SignlessLaplacian}) {
      const auto s = se::numeric_spectrum(g, kind);
      EXPECT_LT(oracle::max_deviation(s.values, oracle::spectrum(g, kind)), 1e-8);
      EXPECT_NEAR(s.trace(), 2.0 * static_cast<double>(g.edge_count()), 1e-8);
      EXPECT_GE(s.min(), 0.0);
    }
  }
}

TEST(Jacobi, GeneralSymmetricMatrix) {
  se::SquareMatrix a(3);
  const double values[3][3] = {{4, 1, -2}, {1, 2, 0}, {-2, 0, 3}};
  Eigen::Matrix3d e;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      a(i, j) = values[i][j];
      e(i, j) = values[i][j];
    }
  }
  const auto result = se::jacobi_eigenvalues(a);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(e);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(result.eigenvalues[i], solver.eigenvalues()[i], 1e-10);
  EXPECT_LT(result.off_diagonal_norm, 1e-10);
}

TEST(Jacobi, Deterministic) {
  const auto g = se::generate("er:40,0.3,99");
  const auto a = se::numeric_spectrum(g, MatrixKind::Laplacian);
  const auto b = se::numeric_spectrum(g, MatrixKind::Laplacian);
  EXPECT_EQ(a.values, b.values);
}

TEST(Jacobi, Errors) {
  se::SquareMatrix a(2);
  a(0, 1) = 1.0;
  EXPECT_EQ(error_of([&] { se::jacobi_eigenvalues(a); }), ErrorCode::NotSymmetric);
  se::SquareMatrix neg(2);
  neg(0, 0) = -1.0;
  EXPECT_EQ(error_of([&] { se::eig_symmetric(neg, MatrixKind::Laplacian); }),
            ErrorCode::NotPositiveSemidefinite);
}

TEST(Spectrum, ClampsTinyNegatives) {
  const auto s = spectrum_of({2.0, -1e-9, 1e-12});
  expect_values(s.values, {0, 0, 2}, 0.0);
}

TEST(DensitySpectrum, Examples) {
  expect_values(se::density_spectrum(spectrum_of({0, 3, 3}), 3).probs, {0, 0.5, 0.5}, 1e-15);
  expect_values(se::density_spectrum(spectrum_of({0, 2, 2, 4}), 4).probs, {0, 0.25, 0.25, 0.5},
                1e-15);
  EXPECT_EQ(error_of([] { se::density_spectrum(spectrum_of({0, 0}), 0); }),
            ErrorCode::EmptyGraph);
  EXPECT_EQ(error_of([] { se::density_spectrum(spectrum_of({0, 3}), 1); }),
            ErrorCode::InvalidParameter);
}

TEST(MomentSum, Examples) {
  const auto k3 = se::density_spectrum(spectrum_of({0, 3, 3}), 3);
  const auto c4 = se::density_spectrum(spectrum_of({0, 2, 2, 4}), 4);
  EXPECT_NEAR(se::moment_sum(k3, 2.0), 0.5, 1e-15);
  EXPECT_NEAR(se::moment_sum(c4, 2.0), 0.375, 1e-15);
  EXPECT_EQ(se::moment_sum(c4, 1.0), 1.0);
  EXPECT_EQ(error_of([&] { se::moment_sum(c4, 0.0); }), ErrorCode::NonPositiveQ);
  EXPECT_NEAR(se::raw_moment_sum(spectrum_of({0, 2, 2, 4}), 2.0), 24.0, 1e-12);
}

TEST(DensitySpectrum, IsProbabilityVector) {
  for (const auto& g : oracle::corpus(10, 60, 20)) {
    for (auto kind : {MatrixKind::Laplacian, MatrixKind::SignlessLaplacian}) {
      const auto ds = se::density_spectrum(se::numeric_spectrum(g, kind), g.edge_count());
      double sum = 0.0;
      for (double p : ds.probs) {
        EXPECT_GE(p, 0.0);
        sum += p;
      }
      EXPECT_NEAR(sum, 1.0, 1e-9);
    }
  }
}

TEST(ClosedForm, Examples) {
  expect_values(se::closed_form_spectrum(se::FamilySpec::cycle(4), MatrixKind::Laplacian).values,
                {0, 2, 2, 4}, 1e-12);
  expect_values(
      se::closed_form_spectrum(se::FamilySpec::complete(4), MatrixKind::Laplacian).values,
      {0, 4, 4, 4}, 0.0);
  expect_values(se::closed_form_spectrum(se::FamilySpec::path(3), MatrixKind::Laplacian).values,
                {0, 1, 3}, 1e-12);
  expect_values(
      se::closed_form_spectrum(se::FamilySpec::complete(4), MatrixKind::SignlessLaplacian).values,
      {2, 2, 2, 6}, 0.0);
  expect_values(
      se::closed_form_spectrum(se::FamilySpec::bipartite(2, 3), MatrixKind::Laplacian).values,
      {0, 2, 2, 3, 5}, 0.0);
}

TEST(ClosedForm, PathFormulaKeepsTrace) {
  // 2 - 2cos(pi j / n) sums to 2(n - 1); the variant without the factor 2 on
  // the cosine would sum to 2n - 1.
  for (std::size_t n = 2; n <= 40; ++n) {
    const auto s = se::closed_form_spectrum(se::FamilySpec::path(n), MatrixKind::Laplacian);
    EXPECT_NEAR(s.trace(), 2.0 * static_cast<double>(n - 1), 1e-9);
  }
}

TEST(ClosedForm, MatchesEigensolverUpTo50) {
  for (std::size_t n = 3; n <= 50; ++n) {
    for (auto kind : {MatrixKind::Laplacian, MatrixKind::SignlessLaplacian}) {
      for (const auto& spec : {se::FamilySpec::cycle(n), se::FamilySpec::path(n),
                               se::FamilySpec::complete(n)}) {
        const auto formula = se::closed_form_spectrum(spec, kind);
        EXPECT_LT(oracle::max_deviation(formula.values, oracle::spectrum(se::generate(spec), kind)),
                  1e-8)
            << spec.to_string() << ' ' << se::to_string(kind);
      }
    }
    for (std::size_t p = 1; p < n; ++p) {
      const auto spec = se::FamilySpec::bipartite(p, n - p);
      EXPECT_LT(oracle::max_deviation(se::closed_form_spectrum(spec, MatrixKind::Laplacian).values,
                                      oracle::spectrum(se::generate(spec), MatrixKind::Laplacian)),
                1e-8)
          << spec.to_string();
    }
  }
}

TEST(ClosedForm, UnsupportedCombinations) {
  EXPECT_EQ(error_of([] {
              se::closed_form_spectrum(se::FamilySpec::bipartite(2, 3),
                                       MatrixKind::SignlessLaplacian);
            }),
            ErrorCode::UnsupportedCombination);
  EXPECT_EQ(error_of([] {
              se::closed_form_spectrum(se::FamilySpec::erdos_renyi(5, 0.5, 1),
                                       MatrixKind::Laplacian);
            }),
            ErrorCode::UnsupportedCombination);
}

TEST(SpectrumProperties, BipartiteLEqualsQ) {
  for (const auto& g : oracle::corpus(10, 120, 14)) {
    if (!se::is_bipartite(g)) continue;
    EXPECT_LT(se::max_abs_deviation(se::numeric_spectrum(g, MatrixKind::Laplacian).values,
                                    se::numeric_spectrum(g, MatrixKind::SignlessLaplacian).values),
              1e-8);
  }
}

TEST(SpectrumProperties, SignlessMomentsDominateForProvenOrders) {
  for (const auto& g : oracle::corpus(10, 100, 14)) {
    const auto l = se::numeric_spectrum(g, MatrixKind::Laplacian);
    const auto q = se::numeric_spectrum(g, MatrixKind::SignlessLaplacian);
    for (double order : {0.25, 0.5, 1.0, 2.0, 2.5, 3.0}) {
      const double sl = se::raw_moment_sum(l, order);
      const double sq = se::raw_moment_sum(q, order);
      EXPECT_GE(sq, sl - 1e-9 * std::max(1.0, sq));
    }
  }
}

TEST(SpectrumProperties, SignlessMomentsCanLoseBetweenOneAndTwo) {
  // K_3: L = {0,3,3}, Q = {1,1,4}; at q = 1.5 the L moment is 2 * 3^1.5 > 10.
  const auto k3 = se::generate("complete:3");
  const double sl = se::raw_moment_sum(se::numeric_spectrum(k3, MatrixKind::Laplacian), 1.5);
  const double sq = se::raw_moment_sum(se::numeric_spectrum(k3, MatrixKind::SignlessLaplacian), 1.5);
  EXPECT_NEAR(sl, 2.0 * std::pow(3.0, 1.5), 1e-9);
  EXPECT_NEAR(sq, 10.0, 1e-9);
  EXPECT_LT(sq, sl);
}

TEST(ProductSpectrum, Examples) {
  const auto k2 = spectrum_of({0, 2});
  se::ProductContext ctx;
  ctx.regularity1 = 1;
  ctx.regularity2 = 1;
  ctx.degrees1 = {1, 1};
  expect_values(se::product_spectrum(k2, k2, ProductKind::Cartesian, ctx).values, {0, 2, 2, 4},
                1e-15);
  expect_values(se::product_spectrum(k2, k2, ProductKind::Kronecker, ctx).values, {0, 0, 2, 2},
                1e-15);
  const double s2 = std::numbers::sqrt2;
  expect_values(se::product_spectrum(k2, spectrum_of({0}), ProductKind::Corona, ctx).values,
                {0, 2 - s2, 2, 2 + s2}, 1e-12);
  expect_values(se::numeric_spectrum(se::generate("path:4"), MatrixKind::Laplacian).values,
                {0, 2 - s2, 2, 2 + s2}, 1e-12);
}

TEST(ProductSpectrum, Preconditions) {
  const auto p3 = se::generate("path:3");
  const auto k2 = se::generate("complete:2");
  const auto sp = se::numeric_spectrum(p3, MatrixKind::Laplacian);
  const auto sk = se::numeric_spectrum(k2, MatrixKind::Laplacian);
  const auto ctx = se::ProductContext::from_graphs(p3, k2);
  EXPECT_EQ(error_of([&] { se::product_spectrum(sp, sk, ProductKind::Kronecker, ctx); }),
            ErrorCode::RegularityRequired);
  EXPECT_EQ(error_of([&] { se::product_spectrum(sp, sk, ProductKind::Lexicographic, {}); }),
            ErrorCode::MissingAux);
  const auto sq = se::numeric_spectrum(p3, MatrixKind::SignlessLaplacian);
  EXPECT_EQ(error_of([&] { se::product_spectrum(sq, sq, ProductKind::Cartesian, ctx); }),
            ErrorCode::UnsupportedCombination);
}

TEST(ProductSpectrum, MatchesEigensolverOnSmallFactors) {
  std::vector<se::Graph> factors;
  for (const char* spec : {"complete:2", "complete:3", "cycle:4", "cycle:5", "path:3", "path:5",
                           "bipartite:1,3", "bipartite:2,3", "complete:6", "cycle:6",
                           "er:6,0.5,4", "er:5,0.6,8"}) {
    factors.push_back(se::generate(spec));
  }
  std::vector<se::Edge> none;
  factors.push_back(se::Graph::build(1, none));
  // Disconnected factors: two disjoint edges, two disjoint triangles, and a
  // triangle plus an isolated vertex.
  const std::vector<se::Edge> two_edges{{0, 1}, {2, 3}};
  const std::vector<se::Edge> two_triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  const std::vector<se::Edge> triangle_plus_point{{0, 1}, {1, 2}, {0, 2}};
  factors.push_back(se::Graph::build(4, two_edges));
  factors.push_back(se::Graph::build(6, two_triangles));
  factors.push_back(se::Graph::build(4, triangle_plus_point));
  for (auto kind : {ProductKind::Cartesian, ProductKind::Kronecker, ProductKind::Strong,
                    ProductKind::Lexicographic, ProductKind::Corona}) {
    const bool needs_regular = kind == ProductKind::Kronecker || kind == ProductKind::Strong;
    for (const auto& a : factors) {
      for (const auto& b : factors) {
        if (needs_regular && (!se::regularity(a) || !se::regularity(b))) continue;
        const auto formula = se::product_spectrum(
            se::numeric_spectrum(a, MatrixKind::Laplacian),
            se::numeric_spectrum(b, MatrixKind::Laplacian), kind,
            se::ProductContext::from_graphs(a, b));
        const auto expected = oracle::spectrum(se::product(a, b, kind), MatrixKind::Laplacian);
        EXPECT_LT(oracle::max_deviation(formula.values, expected), 1e-8)
            << se::to_string(kind) << " n1=" << a.vertex_count() << " n2=" << b.vertex_count();
      }
    }
  }
}

TEST(Corona, Roots) {
  const auto [lo0, hi0] = se::corona_roots(0.0, 3);
  EXPECT_EQ(lo0, 0.0);
  EXPECT_EQ(hi0, 4.0);
  const auto [lo, hi] = se::corona_roots(2.0, 2);
  EXPECT_NEAR(lo, (5 - std::sqrt(17.0)) / 2, 1e-14);
  EXPECT_NEAR(hi, (5 + std::sqrt(17.0)) / 2, 1e-14);
  for (double x : {0.3, 1.0, 7.5, 120.0}) {
    for (std::size_t n : {1U, 4U, 30U}) {
      const auto [a, b] = se::corona_roots(x, n);
      EXPECT_NEAR(a * b, x, 1e-12 * std::max(1.0, x));
      EXPECT_NEAR(a + b, x + static_cast<double>(n) + 1, 1e-12 * (x + n));
    }
  }
}

TEST(Corona, RecursionMatchesEigensolver) {
  for (const char* spec : {"complete:2", "complete:3", "path:3", "cycle:4", "bipartite:1,3",
                           "er:4,0.5,2"}) {
    const auto seed = se::generate(spec);
    if (seed.edge_count() == 0) continue;
    const auto seed_spectrum = se::numeric_spectrum(seed, MatrixKind::Laplacian);
    for (std::size_t m = 1; m <= 2; ++m) {
      const auto formula = se::corona_graph_spectrum(seed_spectrum, seed.vertex_count(), m);
      const auto g = se::corona_iterate(seed, m);
      EXPECT_EQ(formula.size(), g.vertex_count());
      EXPECT_NEAR(formula.trace(), 2.0 * static_cast<double>(g.edge_count()), 1e-8);
      EXPECT_LT(oracle::max_deviation(formula.values, oracle::spectrum(g, MatrixKind::Laplacian)),
                1e-8)
          << spec << " m=" << m;
    }
  }
}

TEST(Corona, ThreeIterationsOfTriangle) {
  const auto seed = se::generate("complete:3");
  const auto formula =
      se::corona_graph_spectrum(se::numeric_spectrum(seed, MatrixKind::Laplacian), 3, 3);
  EXPECT_EQ(formula.size(), 192U);
  EXPECT_LT(oracle::max_deviation(formula.values,
                                  oracle::spectrum(se::corona_iterate(seed, 3),
                                                   MatrixKind::Laplacian)),
            1e-8);
}

TEST(Corona, CheckedSpectrum) {
  const auto seed = se::generate("complete:3");
  const auto small = se::checked_corona_graph_spectrum(seed, 1, 200);
  EXPECT_TRUE(small.validated);
  EXPECT_LT(small.max_deviation, 1e-8);
  EXPECT_FALSE(small.diagnostic.has_value());
  const auto large = se::checked_corona_graph_spectrum(seed, 4, 200);
  EXPECT_FALSE(large.validated);
  EXPECT_EQ(large.spectrum.size(), 768U);
  EXPECT_EQ(error_of([&] { se::corona_graph_spectrum(se::numeric_spectrum(seed, MatrixKind::Laplacian), 3, 7); }),
            ErrorCode::SizeCapExceeded);
}
