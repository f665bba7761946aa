#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "oracles.hpp"
#include "spectral_entropy/edge_list.hpp"
#include "spectral_entropy/error.hpp"
#include "spectral_entropy/families.hpp"
#include "spectral_entropy/matrix.hpp"
#include "spectral_entropy/products.hpp"
#include "spectral_entropy/spectrum.hpp"

namespace se = spectral_entropy;
using se::Edge;
using se::ErrorCode;
using se::Graph;
using se::MatrixKind;
using se::ProductKind;

namespace {

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

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST(BuildGraph, SingleEdge) {
  const std::vector<Edge> edges{{0, 1}};
  const auto g = se::build_graph(2, edges);
  EXPECT_EQ(g.vertex_count(), 2U);
  EXPECT_EQ(g.edge_count(), 1U);
}

TEST(BuildGraph, CanonicalisesAndDeduplicates) {
  const std::vector<Edge> edges{{5, 3}, {3, 5}, {1, 0}, {0, 1}, {2, 1}};
  const auto g = Graph::build(6, edges);
  const std::vector<Edge> expected{{0, 1}, {1, 2}, {3, 5}};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_TRUE(g.adjacent(5, 3));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(BuildGraph, RejectsBadInput) {
  const std::vector<Edge> loop{{0, 0}};
  const std::vector<Edge> out_of_range{{0, 3}};
  EXPECT_EQ(error_of([&] { Graph::build(3, loop); }), ErrorCode::SelfLoop);
  EXPECT_EQ(error_of([&] { Graph::build(3, out_of_range); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(error_of([] { Graph::build(0, {}); }), ErrorCode::InvalidCount);
}

TEST(BuildGraph, CospectralFirstGraph) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {4, 5}, {5, 6}, {5, 3}, {4, 6}};
  const auto g = Graph::build(8, edges);
  EXPECT_EQ(g.edge_count(), 6U);
  EXPECT_EQ(g.degree(5), 3U);
  EXPECT_EQ(g.degree(7), 0U);
}

TEST(Families, BasicShapes) {
  const auto c4 = se::generate("cycle:4");
  EXPECT_EQ(c4.vertex_count(), 4U);
  EXPECT_EQ(c4.edge_count(), 4U);
  EXPECT_EQ(se::regularity(c4), 2U);

  const auto k3 = se::generate("complete:3");
  EXPECT_EQ(k3.edge_count(), 3U);

  const auto p3 = se::generate("path:3");
  const std::vector<Edge> expected{{0, 1}, {1, 2}};
  EXPECT_EQ(p3.edges(), expected);

  const auto k23 = se::generate("bipartite:2,3");
  EXPECT_EQ(k23.vertex_count(), 5U);
  EXPECT_EQ(k23.edge_count(), 6U);
}

TEST(Families, ParseErrors) {
  EXPECT_EQ(error_of([] { se::generate("cycle:2"); }), ErrorCode::InvalidParameter);
  EXPECT_EQ(error_of([] { se::generate("path:1"); }), ErrorCode::InvalidParameter);
  EXPECT_EQ(error_of([] { se::generate("er:5,1.5,1"); }), ErrorCode::InvalidParameter);
  EXPECT_EQ(error_of([] { se::generate("wheel:5"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { se::generate("cycle:x"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { se::generate("bipartite:3"); }), ErrorCode::ParseError);
}

TEST(Families, SpecRoundTrip) {
  for (const char* text : {"cycle:7", "path:2", "complete:5", "bipartite:2,4", "er:9,0.25,17"}) {
    EXPECT_EQ(se::FamilySpec::parse(text).to_string(), text);
  }
}

TEST(Families, ErdosRenyiIsReproducible) {
  const auto a = se::generate("er:30,0.3,12345");
  const auto b = se::generate("er:30,0.3,12345");
  const auto c = se::generate("er:30,0.3,12346");
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_EQ(se::generate("er:10,0,1").edge_count(), 0U);
  EXPECT_EQ(se::generate("er:10,1,1").edge_count(), 45U);
}

TEST(Families, ErdosRenyiEdgeDensity) {
  std::size_t edges = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    edges += se::generate(se::FamilySpec::erdos_renyi(40, 0.25, seed)).edge_count();
  }
  const double observed = static_cast<double>(edges) / (20.0 * 780.0);
  EXPECT_NEAR(observed, 0.25, 0.02);
}

TEST(GraphQueries, DegreesRegularityBipartite) {
  const auto c4 = se::generate("cycle:4");
  EXPECT_EQ(c4.degrees(), (std::vector<std::size_t>{2, 2, 2, 2}));
  EXPECT_EQ(se::regularity(c4), 2U);
  EXPECT_TRUE(se::is_bipartite(c4));

  const auto k3 = se::generate("complete:3");
  EXPECT_EQ(se::regularity(k3), 2U);
  EXPECT_FALSE(se::is_bipartite(k3));
  EXPECT_FALSE(se::two_coloring(k3).has_value());

  const auto p3 = se::generate("path:3");
  EXPECT_EQ(p3.degrees(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_FALSE(se::regularity(p3).has_value());
  const auto colours = se::two_coloring(p3);
  ASSERT_TRUE(colours.has_value());
  for (const auto& e : p3.edges()) EXPECT_NE((*colours)[e.u], (*colours)[e.v]);
}

TEST(GraphQueries, Components) {
  const std::vector<Edge> edges{{0, 1}, {2, 3}};
  EXPECT_EQ(se::component_count(Graph::build(5, edges)), 3U);
  EXPECT_TRUE(se::is_connected(se::generate("path:6")));
}

TEST(Matrix, SmallExamples) {
  const auto k2 = se::generate("complete:2");
  const auto l = se::graph_matrix(k2, MatrixKind::Laplacian);
  EXPECT_EQ(l(0, 0), 1.0);
  EXPECT_EQ(l(0, 1), -1.0);
  EXPECT_EQ(l(1, 0), -1.0);
  EXPECT_EQ(l(1, 1), 1.0);
  const auto q = se::graph_matrix(k2, MatrixKind::SignlessLaplacian);
  EXPECT_EQ(q(0, 1), 1.0);
  EXPECT_EQ(q(1, 1), 1.0);

  const auto c3 = se::graph_matrix(se::generate("cycle:3"), MatrixKind::Laplacian);
  EXPECT_EQ(c3.trace(), 6.0);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(c3(i, j), i == j ? 2.0 : -1.0);
  }
}

TEST(Matrix, PropertiesOnCorpus) {
  for (const auto& g : oracle::corpus(8, 40, 12)) {
    const auto l = se::graph_matrix(g, MatrixKind::Laplacian);
    const auto q = se::graph_matrix(g, MatrixKind::SignlessLaplacian);
    EXPECT_EQ(l.asymmetry(), 0.0);
    EXPECT_EQ(q.asymmetry(), 0.0);
    EXPECT_EQ(l.trace(), 2.0 * static_cast<double>(g.edge_count()));
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < g.vertex_count(); ++j) row += l(i, j);
      EXPECT_EQ(row, 0.0);
    }
    const auto degrees = g.degrees();
    std::size_t sum = 0;
    for (auto d : degrees) sum += d;
    EXPECT_EQ(sum, 2 * g.edge_count());
  }
}

TEST(EdgeList, ParsesCommentsAndBlankLines) {
  std::istringstream in("# triangle\n\nn 3\n0 1\n  1 2\n# more\n2 0\n");
  const auto g = se::read_edge_list(in);
  EXPECT_EQ(g, se::generate("complete:3"));
}

TEST(EdgeList, Errors) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return se::read_edge_list(in);
  };
  EXPECT_EQ(error_of([&] { parse("0 1\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([&] { parse("n 3\n0 1 2\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([&] { parse("n 3\n0 x\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([&] { parse("n 3\n0 3\n"); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(error_of([&] { parse("n 3\n-1 2\n"); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(error_of([&] { parse("n 3\n1 1\n"); }), ErrorCode::SelfLoop);
  EXPECT_EQ(error_of([&] { parse("n 0\n"); }), ErrorCode::InvalidCount);
  EXPECT_EQ(error_of([] { se::load_edge_list("/nonexistent/graph.edges"); }),
            ErrorCode::ParseError);
}

TEST(EdgeList, RoundTripProperty) {
  for (const auto& g : oracle::corpus(9, 60, 20)) {
    std::stringstream buffer;
    se::write_edge_list(buffer, g);
    EXPECT_EQ(se::read_edge_list(buffer), g);
  }
}

TEST(Products, SmallExamples) {
  const auto k2 = se::generate("complete:2");
  const auto cart = se::product(k2, k2, ProductKind::Cartesian);
  EXPECT_EQ(cart.vertex_count(), 4U);
  EXPECT_EQ(cart.edge_count(), 4U);
  EXPECT_EQ(se::regularity(cart), 2U);
  EXPECT_TRUE(se::is_connected(cart));

  EXPECT_EQ(se::product(k2, k2, ProductKind::Strong), se::generate("complete:4"));
  EXPECT_EQ(se::product(k2, k2, ProductKind::Kronecker).edge_count(), 2U);

  const std::vector<Edge> no_edges;
  const auto k1 = Graph::build(1, no_edges);
  const auto corona = se::product(k2, k1, ProductKind::Corona);
  EXPECT_EQ(corona.vertex_count(), 4U);
  EXPECT_EQ(sorted_degrees(corona), (std::vector<std::size_t>{1, 1, 2, 2}));
  EXPECT_TRUE(se::is_connected(corona));
  EXPECT_EQ(corona.edge_count(), 3U);
}

TEST(Products, VertexCounts) {
  const auto g1 = se::generate("path:3");
  const auto g2 = se::generate("cycle:4");
  for (auto kind : {ProductKind::Cartesian, ProductKind::Kronecker, ProductKind::Strong,
                    ProductKind::Lexicographic, ProductKind::Corona}) {
    const auto p = se::product(g1, g2, kind);
    EXPECT_EQ(p.vertex_count(), se::product_vertex_count(3, 4, kind));
  }
  EXPECT_EQ(se::product_vertex_count(3, 4, ProductKind::Corona), 15U);
  EXPECT_EQ(se::product_vertex_count(3, 4, ProductKind::Lexicographic), 12U);
}

TEST(Products, IndexingConvention) {
  const auto p2 = se::generate("path:2");
  const auto p3 = se::generate("path:3");
  // (i, j) -> i * n2 + j: (0,0)-(0,1) is an edge of the Cartesian product.
  const auto cart = se::product(p2, p3, ProductKind::Cartesian);
  EXPECT_TRUE(cart.adjacent(0, 1));
  EXPECT_TRUE(cart.adjacent(0, 3));
  EXPECT_FALSE(cart.adjacent(0, 4));
  // Corona: copy of P3 for vertex 1 sits at 2 + 3 .. 2 + 5.
  const auto corona = se::product(p2, p3, ProductKind::Corona);
  EXPECT_TRUE(corona.adjacent(1, 5));
  EXPECT_TRUE(corona.adjacent(5, 6));
  EXPECT_FALSE(corona.adjacent(0, 5));
}

TEST(Products, CommutativeUpToIsomorphism) {
  const std::vector<Graph> factors{se::generate("complete:2"), se::generate("path:3"),
                                   se::generate("cycle:5"), se::generate("bipartite:1,3"),
                                   se::generate("er:5,0.5,3")};
  for (auto kind : {ProductKind::Cartesian, ProductKind::Kronecker, ProductKind::Strong}) {
    for (const auto& a : factors) {
      for (const auto& b : factors) {
        const auto ab = se::product(a, b, kind);
        const auto ba = se::product(b, a, kind);
        EXPECT_EQ(sorted_degrees(ab), sorted_degrees(ba));
        EXPECT_LT(se::max_abs_deviation(se::numeric_spectrum(ab, MatrixKind::Laplacian).values,
                                        se::numeric_spectrum(ba, MatrixKind::Laplacian).values),
                  1e-8);
      }
    }
  }
}

TEST(Corona, IterateCountsAndRecurrence) {
  const auto k3 = se::generate("complete:3");
  EXPECT_EQ(se::corona_iterate(k3, 0), k3);
  EXPECT_EQ(se::corona_iterate(k3, 1).vertex_count(), 12U);
  EXPECT_EQ(se::corona_iterate(k3, 2).vertex_count(), 48U);
  for (const auto& seed : {se::generate("complete:3"), se::generate("path:3"),
                           se::generate("cycle:4")}) {
    auto g = seed;
    for (std::size_t k = 0; k < 3; ++k) {
      const auto next = se::corona_iterate(seed, k + 1);
      EXPECT_EQ(next, se::product(g, seed, ProductKind::Corona));
      EXPECT_EQ(next.edge_count(),
                se::corona_edge_count(seed.vertex_count(), seed.edge_count(), k + 1));
      g = next;
    }
  }
}

TEST(Corona, SizeCap) {
  const auto k3 = se::generate("complete:3");
  EXPECT_EQ(error_of([&] { se::corona_iterate(k3, 7); }), ErrorCode::SizeCapExceeded);
  EXPECT_EQ(se::corona_vertex_count(3, 6), 12288U);
  EXPECT_EQ(error_of([] { se::corona_vertex_count(3, 2, 47); }), ErrorCode::SizeCapExceeded);
}
