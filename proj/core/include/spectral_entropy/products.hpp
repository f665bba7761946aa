#pragma once

#include <cstddef>

#include "spectral_entropy/graph.hpp"

namespace spectral_entropy {

inline constexpr std::size_t kDefaultVertexCap = 20000;

/// Graph product of g1 and g2.
///
/// For the four "grid" products vertex (i, j) of V(g1) x V(g2) gets index
/// i * n2 + j. The corona product keeps g1's vertices at 0..n1-1 and places
/// the copy of g2 attached to vertex i at n1 + i * n2 .. n1 + (i + 1) * n2 - 1.
Graph product(const Graph& g1, const Graph& g2, ProductKind kind);

/// Vertex count of the product without building it.
std::size_t product_vertex_count(std::size_t n1, std::size_t n2, ProductKind kind);

/// n (1 + n)^iterations, or SizeCapExceeded if that exceeds cap.
std::size_t corona_vertex_count(std::size_t n, std::size_t iterations,
                                std::size_t cap = kDefaultVertexCap);

/// Edge count of the iterated corona graph; m_{k+1} = m_k + n_k (m_0 + n_0).
std::size_t corona_edge_count(std::size_t n, std::size_t m, std::size_t iterations);

/// G^(0) = seed, G^(k+1) = G^(k) o seed.
Graph corona_iterate(const Graph& seed, std::size_t iterations,
                     std::size_t cap = kDefaultVertexCap);

}  // namespace spectral_entropy
