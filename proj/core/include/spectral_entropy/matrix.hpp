#pragma once

#include <cstddef>
#include <vector>

#include "spectral_entropy/graph.hpp"

namespace spectral_entropy {

/// Dense square matrix, row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  double trace() const;

  /// Largest |a_ij - a_ji|.
  double asymmetry() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// L(G) = D - A or Q(G) = D + A.
SquareMatrix graph_matrix(const Graph& g, MatrixKind kind);

}  // namespace spectral_entropy
