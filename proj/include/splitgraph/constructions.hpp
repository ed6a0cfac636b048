#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "splitgraph/graph.hpp"
#include "splitgraph/matrix.hpp"

namespace splitgraph {

/// (p, q) for the generalized splitting graph: p copies of G, q splitting sets.
struct SplitParams {
  std::size_t p = 1;
  std::size_t q = 1;
  friend bool operator==(const SplitParams&, const SplitParams&) = default;
};

/// (c, k) for the shadow-splitting graph: c mutually shadowed copies, k splitting sets.
struct ShadowSplitParams {
  std::size_t c = 1;
  std::size_t k = 1;
  friend bool operator==(const ShadowSplitParams&, const ShadowSplitParams&) = default;
};

using OperatorParams = std::variant<SplitParams, ShadowSplitParams>;

/// Small 0/1 block-pattern matrix M such that an operator graph has
/// adjacency kron(M, A(G)).
class CoefficientMatrix {
 public:
  CoefficientMatrix(std::size_t dim, std::vector<int> entries);

  std::size_t dim() const { return dim_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  const std::vector<int>& entries() const { return entries_; }

  /// Number of 1 entries (diagonal included).
  std::size_t ones() const;
  std::size_t row_sum(std::size_t i) const;
  DenseMatrix to_dense() const;

  friend bool operator==(const CoefficientMatrix&, const CoefficientMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<int> entries_;
};

/// [[I_p, J], [J, 0_q]]
CoefficientMatrix coefficient_matrix_split(std::size_t p, std::size_t q);
/// [[J_c, J], [J, 0_k]]
CoefficientMatrix coefficient_matrix_shadow(std::size_t c, std::size_t k);
/// J_m, the m-shadow pattern.
CoefficientMatrix coefficient_matrix_all_ones(std::size_t m);

/// Graph with adjacency kron(M, A(g)). M must have a zero diagonal wherever
/// A(g) could put a loop, which holds for every pattern above since A(g) has
/// a zero diagonal.
Graph kron(const CoefficientMatrix& m, const Graph& g);

// Kronecker-route constructors. Vertex (block b, base vertex i) is b*n + i;
// the p (or c) copies come first, then the q (or k) splitting sets.
Graph generalized_splitting(const Graph& g, SplitParams params);
Graph shadow_splitting(const Graph& g, ShadowSplitParams params);
Graph m_shadow(const Graph& g, std::size_t m);
Graph m_splitting(const Graph& g, std::size_t m);

/// Tensor product; (u, v) maps to u * h.order() + v.
Graph kronecker_product(const Graph& g, const Graph& h);

// Definition route: builds the same graphs edge by edge from neighborhood
// rules, with no Kronecker products involved.
Graph construct_by_neighborhood(const Graph& g, SplitParams params);
Graph construct_by_neighborhood(const Graph& g, ShadowSplitParams params);
Graph construct_by_neighborhood(const Graph& g, const OperatorParams& params);
Graph m_shadow_by_definition(const Graph& g, std::size_t m);

std::size_t block_count(const OperatorParams& params);
std::string describe(const OperatorParams& params);

void validate(SplitParams params);
void validate(ShadowSplitParams params);

}  // namespace splitgraph
