#include "spectral_entropy/products.hpp"

#include <limits>
#include <string>
#include <vector>

#include "spectral_entropy/error.hpp"

namespace spectral_entropy {

namespace {

void add_fibres(const Graph& g1, const Graph& g2, std::vector<Edge>& out) {
  const std::size_t n2 = g2.vertex_count();
  for (Vertex i = 0; i < g1.vertex_count(); ++i)
    for (const auto& e : g2.edges()) out.push_back({i * n2 + e.u, i * n2 + e.v});
}

void add_layers(const Graph& g1, const Graph& g2, std::vector<Edge>& out) {
  const std::size_t n2 = g2.vertex_count();
  for (const auto& e : g1.edges())
    for (Vertex j = 0; j < n2; ++j) out.push_back({e.u * n2 + j, e.v * n2 + j});
}

void add_tensor(const Graph& g1, const Graph& g2, std::vector<Edge>& out) {
  const std::size_t n2 = g2.vertex_count();
  for (const auto& a : g1.edges()) {
    for (const auto& b : g2.edges()) {
      out.push_back({a.u * n2 + b.u, a.v * n2 + b.v});
      out.push_back({a.u * n2 + b.v, a.v * n2 + b.u});
    }
  }
}

std::size_t checked_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    throw Error(ErrorCode::SizeCapExceeded, "vertex count overflows");
  }
  return a * b;
}

}  // namespace

std::size_t product_vertex_count(std::size_t n1, std::size_t n2, ProductKind kind) {
  return kind == ProductKind::Corona ? checked_mul(n1, 1 + n2) : checked_mul(n1, n2);
}

Graph product(const Graph& g1, const Graph& g2, ProductKind kind) {
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n2 = g2.vertex_count();
  std::vector<Edge> edges;
  switch (kind) {
    case ProductKind::Cartesian:
      add_fibres(g1, g2, edges);
      add_layers(g1, g2, edges);
      break;
    case ProductKind::Kronecker:
      add_tensor(g1, g2, edges);
      break;
    case ProductKind::Strong:
      add_fibres(g1, g2, edges);
      add_layers(g1, g2, edges);
      add_tensor(g1, g2, edges);
      break;
    case ProductKind::Lexicographic:
      add_fibres(g1, g2, edges);
      for (const auto& e : g1.edges())
        for (Vertex j = 0; j < n2; ++j)
          for (Vertex l = 0; l < n2; ++l) edges.push_back({e.u * n2 + j, e.v * n2 + l});
      break;
    case ProductKind::Corona:
      edges = g1.edges();
      for (Vertex i = 0; i < n1; ++i) {
        const Vertex base = n1 + i * n2;
        for (const auto& e : g2.edges()) edges.push_back({base + e.u, base + e.v});
        for (Vertex j = 0; j < n2; ++j) edges.push_back({i, base + j});
      }
      break;
  }
  return Graph::build(product_vertex_count(n1, n2, kind), edges);
}

std::size_t corona_vertex_count(std::size_t n, std::size_t iterations, std::size_t cap) {
  std::size_t count = n;
  for (std::size_t k = 0; k < iterations; ++k) {
    count = checked_mul(count, 1 + n);
    if (count > cap) {
      throw Error(ErrorCode::SizeCapExceeded,
                  "corona graph after " + std::to_string(k + 1) + " iterations has " +
                      std::to_string(count) + " vertices, cap is " + std::to_string(cap));
    }
  }
  if (count > cap) {
    throw Error(ErrorCode::SizeCapExceeded, "seed exceeds vertex cap " + std::to_string(cap));
  }
  return count;
}

std::size_t corona_edge_count(std::size_t n, std::size_t m, std::size_t iterations) {
  std::size_t vertices = n;
  std::size_t edges = m;
  for (std::size_t k = 0; k < iterations; ++k) {
    edges += vertices * (m + n);
    vertices *= 1 + n;
  }
  return edges;
}

Graph corona_iterate(const Graph& seed, std::size_t iterations, std::size_t cap) {
  corona_vertex_count(seed.vertex_count(), iterations, cap);
  Graph current = seed;
  for (std::size_t k = 0; k < iterations; ++k) current = product(current, seed, ProductKind::Corona);
  return current;
}

}  // namespace spectral_entropy
