#include "spectral_entropy/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <string>

#include "spectral_entropy/error.hpp"

namespace spectral_entropy {

namespace {

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::InvalidCount: return "InvalidCount";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NonPositiveQ: return "NonPositiveQ";
    case ErrorCode::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorCode::RegularityRequired: return "RegularityRequired";
    case ErrorCode::MissingAux: return "MissingAux";
    case ErrorCode::ParameterAtLimit: return "ParameterAtLimit";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
  }
  return "Unknown";
}

std::string_view to_string(MatrixKind kind) {
  return kind == MatrixKind::Laplacian ? "L" : "Q";
}

std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::Cartesian: return "cartesian";
    case ProductKind::Kronecker: return "kronecker";
    case ProductKind::Strong: return "strong";
    case ProductKind::Lexicographic: return "lexicographic";
    case ProductKind::Corona: return "corona";
  }
  return "unknown";
}

MatrixKind parse_matrix_kind(std::string_view text) {
  const auto key = lowercase(text);
  if (key == "l" || key == "laplacian") return MatrixKind::Laplacian;
  if (key == "q" || key == "signless" || key == "signless-laplacian") {
    return MatrixKind::SignlessLaplacian;
  }
  throw Error(ErrorCode::ParseError, "unknown matrix kind '" + std::string(text) + "'");
}

ProductKind parse_product_kind(std::string_view text) {
  const auto key = lowercase(text);
  if (key == "cartesian") return ProductKind::Cartesian;
  if (key == "kronecker" || key == "tensor") return ProductKind::Kronecker;
  if (key == "strong") return ProductKind::Strong;
  if (key == "lexicographic" || key == "lex") return ProductKind::Lexicographic;
  if (key == "corona") return ProductKind::Corona;
  throw Error(ErrorCode::ParseError, "unknown product kind '" + std::string(text) + "'");
}

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(n) {
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw Error(ErrorCode::InvalidCount, "a graph needs at least one vertex");
  std::vector<Edge> canonical;
  canonical.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") outside [0," + std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
    canonical.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());
  return Graph(n, std::move(canonical));
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(n_);
  for (Vertex v = 0; v < n_; ++v) out[v] = adjacency_[v].size();
  return out;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::optional<std::size_t> regularity(const Graph& g) {
  const std::size_t k = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  return k;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g) {
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> color(g.vertex_count(), kUnset);
  std::queue<Vertex> frontier;
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    if (color[start] != kUnset) continue;
    color[start] = 0;
    frontier.push(start);
    while (!frontier.empty()) {
      const Vertex v = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == kUnset) {
          color[w] = static_cast<std::uint8_t>(1 - color[v]);
          frontier.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack;
  std::size_t components = 0;
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) continue;
    ++components;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

}  // namespace spectral_entropy
