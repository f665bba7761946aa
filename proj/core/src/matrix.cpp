#include "spectral_entropy/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace spectral_entropy {

double SquareMatrix::trace() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < n_; ++i) sum += (*this)(i, i);
  return sum;
}

double SquareMatrix::asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

SquareMatrix graph_matrix(const Graph& g, MatrixKind kind) {
  const double off = kind == MatrixKind::Laplacian ? -1.0 : 1.0;
  SquareMatrix m(g.vertex_count());
  for (const auto& e : g.edges()) {
    m(e.u, e.v) = off;
    m(e.v, e.u) = off;
    m(e.u, e.u) += 1.0;
    m(e.v, e.v) += 1.0;
  }
  return m;
}

}  // namespace spectral_entropy
