#include "verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "spectral_entropy/entropy.hpp"
#include "spectral_entropy/error.hpp"
#include "spectral_entropy/families.hpp"
#include "spectral_entropy/products.hpp"
#include "spectral_entropy/spectrum.hpp"

namespace spectral_entropy::cli {

namespace {

Graph from_pairs(std::size_t n, std::initializer_list<Edge> edges) {
  return Graph::build(n, std::vector<Edge>(edges));
}

VerifyCheck make_check(std::string name, double deviation, double tol, std::string detail = {}) {
  return {std::move(name), deviation <= tol, deviation, tol, std::move(detail)};
}

// Worst deviation between a closed form and the eigensolver over a size range.
VerifyCheck closed_form_check(FamilyKind kind, MatrixKind matrix, double tol) {
  double worst = 0.0;
  std::string worst_at;
  auto probe = [&](const FamilySpec& spec) {
    const auto formula = closed_form_spectrum(spec, matrix);
    const auto numeric = numeric_spectrum(generate(spec), matrix);
    const double dev = max_abs_deviation(formula.values, numeric.values);
    if (dev >= worst) {
      worst = dev;
      worst_at = spec.to_string();
    }
  };
  if (kind == FamilyKind::CompleteBipartite) {
    for (std::size_t p = 1; p < 30; ++p)
      for (std::size_t q = 1; p + q <= 30; ++q)
        if (p + q >= 3) probe(FamilySpec::bipartite(p, q));
  } else {
    for (std::size_t n = 3; n <= 30; ++n) probe(FamilySpec{kind, n});
  }
  const auto label = worst_at.substr(0, worst_at.find(':'));
  return make_check("closed_form " + label + " " + std::string(to_string(matrix)) + " n=3..30",
                    worst, tol, "worst at " + worst_at);
}

std::vector<std::pair<std::string, Graph>> product_factors() {
  return {{"K2", generate("complete:2")},
          {"K3", generate("complete:3")},
          {"C4", generate("cycle:4")},
          {"C5", generate("cycle:5")},
          {"P3", generate("path:3")}};
}

VerifyCheck product_check(ProductKind kind, double tol) {
  const bool needs_regular = kind == ProductKind::Kronecker || kind == ProductKind::Strong;
  double worst = 0.0;
  std::size_t pairs = 0;
  for (const auto& [name1, g1] : product_factors()) {
    for (const auto& [name2, g2] : product_factors()) {
      if (needs_regular && (!regularity(g1) || !regularity(g2))) continue;
      const auto formula = product_spectrum(numeric_spectrum(g1, MatrixKind::Laplacian),
                                            numeric_spectrum(g2, MatrixKind::Laplacian), kind,
                                            ProductContext::from_graphs(g1, g2));
      const auto numeric = numeric_spectrum(product(g1, g2, kind), MatrixKind::Laplacian);
      worst = std::max(worst, max_abs_deviation(formula.values, numeric.values));
      ++pairs;
    }
  }
  return make_check("product " + std::string(to_string(kind)), worst, tol,
                    std::to_string(pairs) + " factor pairs");
}

// Largest disagreement between the two graphs over all families and a
// (q, r) grid.
double entropy_disagreement(const Graph& a, const Graph& b, MatrixKind kind) {
  const auto da = density_spectrum(numeric_spectrum(a, kind), a.edge_count());
  const auto db = density_spectrum(numeric_spectrum(b, kind), b.edge_count());
  double worst = std::abs(von_neumann(da) - von_neumann(db));
  for (double q : {0.5, 2.0, 3.0}) {
    worst = std::max(worst, std::abs(renyi(da, q) - renyi(db, q)));
    worst = std::max(worst, std::abs(tsallis(da, q) - tsallis(db, q)));
    for (double r : {0.5, 2.0, 3.0}) {
      const EntropyParams p{EntropyFamily::SharmaMittal, q, r};
      worst = std::max(worst, std::abs(entropy(da, p) - entropy(db, p)));
    }
  }
  return worst;
}

VerifyCheck moment_order_check() {
  std::vector<Graph> corpus;
  for (std::size_t n = 3; n <= 10; ++n) {
    corpus.push_back(generate(FamilySpec::cycle(n)));
    corpus.push_back(generate(FamilySpec::path(n)));
    corpus.push_back(generate(FamilySpec::complete(n)));
  }
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    corpus.push_back(generate(FamilySpec::erdos_renyi(4 + seed % 9, 0.4, seed)));
  }
  // Orders strictly between 1 and 2 are left out: K_3 at q = 1.5 already has
  // S_L > S_Q.
  double worst = 0.0;  // largest S_L - S_Q, relative
  for (const auto& g : corpus) {
    const auto sl = numeric_spectrum(g, MatrixKind::Laplacian);
    const auto sq = numeric_spectrum(g, MatrixKind::SignlessLaplacian);
    for (double q : {0.5, 2.0, 3.0}) {
      const double l = raw_moment_sum(sl, q);
      const double s = raw_moment_sum(sq, q);
      worst = std::max(worst, (l - s) / std::max(1.0, s));
    }
  }
  return make_check("S_Q,q >= S_L,q on corpus, q in {0.5,2,3}", std::max(0.0, worst), 1e-12,
                    std::to_string(corpus.size()) + " graphs");
}

VerifyCheck corona_check(double tol) {
  double worst = 0.0;
  for (const auto* spec : {"complete:2", "complete:3", "path:3", "cycle:4"}) {
    const auto seed = generate(spec);
    for (std::size_t m = 1; m <= 2; ++m) {
      const auto formula = corona_graph_spectrum(numeric_spectrum(seed, MatrixKind::Laplacian),
                                                 seed.vertex_count(), m);
      const auto numeric =
          numeric_spectrum(corona_iterate(seed, m), MatrixKind::Laplacian);
      worst = std::max(worst, max_abs_deviation(formula.values, numeric.values));
    }
  }
  return make_check("corona graph recursion m<=2", worst, tol, "seeds K2 K3 P3 C4");
}

}  // namespace

Graph laplacian_cospectral_first() {
  return from_pairs(8, {{0, 1}, {1, 2}, {4, 5}, {5, 6}, {5, 3}, {4, 6}});
}

Graph laplacian_cospectral_second() {
  return from_pairs(8, {{0, 1}, {1, 2}, {4, 5}, {5, 6}, {1, 7}, {4, 6}});
}

Graph signless_cospectral_first() { return from_pairs(4, {{0, 3}, {0, 2}, {3, 2}}); }

Graph signless_cospectral_second() { return from_pairs(4, {{0, 3}, {3, 1}, {3, 2}}); }

std::vector<VerifyCheck> run_verification(double tol) {
  std::vector<VerifyCheck> checks;
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      checks.push_back(body());
    } catch (const Error& e) {
      checks.push_back({name, false, std::nan(""), tol, e.what()});
    }
  };

  for (auto kind : {FamilyKind::Cycle, FamilyKind::Path, FamilyKind::Complete}) {
    for (auto matrix : {MatrixKind::Laplacian, MatrixKind::SignlessLaplacian}) {
      guarded("closed_form", [&] { return closed_form_check(kind, matrix, tol); });
    }
  }
  guarded("closed_form bipartite", [&] {
    return closed_form_check(FamilyKind::CompleteBipartite, MatrixKind::Laplacian, tol);
  });

  for (auto kind : {ProductKind::Cartesian, ProductKind::Kronecker, ProductKind::Strong,
                    ProductKind::Lexicographic, ProductKind::Corona}) {
    guarded("product", [&] { return product_check(kind, tol); });
  }
  guarded("corona", [&] { return corona_check(tol); });

  guarded("cospectral L pair", [&] {
    return make_check("cospectral L pair entropies", entropy_disagreement(
                          laplacian_cospectral_first(), laplacian_cospectral_second(),
                          MatrixKind::Laplacian),
                      1e-12, "all four families, q,r in {0.5,2,3}");
  });
  guarded("cospectral Q pair", [&] {
    return make_check("cospectral Q pair entropies", entropy_disagreement(
                          signless_cospectral_first(), signless_cospectral_second(),
                          MatrixKind::SignlessLaplacian),
                      1e-12, "all four families, q,r in {0.5,2,3}");
  });
  guarded("moment order", [] { return moment_order_check(); });
  return checks;
}

}  // namespace spectral_entropy::cli
