#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace spectral_entropy {

using Vertex = std::size_t;

/// Unordered vertex pair. Inside a Graph it is always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class MatrixKind { Laplacian, SignlessLaplacian };

enum class ProductKind { Cartesian, Kronecker, Strong, Lexicographic, Corona };

std::string_view to_string(MatrixKind kind);
std::string_view to_string(ProductKind kind);

/// Accepts "L"/"Q" as well as the long names, case-insensitive.
MatrixKind parse_matrix_kind(std::string_view text);
ProductKind parse_product_kind(std::string_view text);

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// The edge list is deduplicated and sorted lexicographically with u < v in
/// every pair, so two graphs built from the same edge set compare equal no
/// matter how the input was ordered.
class Graph {
 public:
  /// Throws InvalidCount for n == 0, IndexOutOfRange and SelfLoop for bad
  /// pairs. Duplicate pairs (in either orientation) collapse to one edge.
  static Graph build(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Sorted neighbour list.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }

  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::vector<std::size_t> degrees() const;

  bool adjacent(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::build(n, edges);
}

/// Common degree if every vertex has it.
std::optional<std::size_t> regularity(const Graph& g);

std::size_t max_degree(const Graph& g);

/// BFS 2-colouring (0/1 per vertex); empty when an odd cycle exists.
std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g);

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

/// Connected components, isolated vertices included.
std::size_t component_count(const Graph& g);

inline bool is_connected(const Graph& g) { return component_count(g) == 1; }

}  // namespace spectral_entropy
