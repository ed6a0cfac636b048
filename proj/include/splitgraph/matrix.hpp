#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "splitgraph/graph.hpp"

namespace splitgraph {

/// Square row-major matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}
  DenseMatrix(std::size_t dim, std::vector<double> data);

  static DenseMatrix identity(std::size_t dim);
  static DenseMatrix adjacency(const Graph& g);

  std::size_t dim() const { return dim_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  std::span<const double> data() const { return data_; }

  double frobenius_norm() const;

  /// Largest |a_ij - a_ji|.
  double asymmetry() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// Block matrix [a_ij * b].
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace splitgraph
