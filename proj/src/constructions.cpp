#include "splitgraph/constructions.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace splitgraph {
namespace {

std::size_t checked_product(std::size_t blocks, std::size_t n, const std::string& what) {
  std::size_t order = 0;
  if (__builtin_mul_overflow(blocks, n, &order)) {
    throw CapExceededError(std::numeric_limits<std::size_t>::max(), max_order(), what);
  }
  check_order(order, what);
  return order;
}

}  // namespace

void validate(SplitParams params) {
  if (params.p < 1 || params.q < 1) {
    throw GraphError("generalized splitting needs p >= 1 and q >= 1");
  }
}

void validate(ShadowSplitParams params) {
  if (params.c < 1 || params.k < 1) {
    throw GraphError("shadow-splitting needs c >= 1 and k >= 1");
  }
}

CoefficientMatrix::CoefficientMatrix(std::size_t dim, std::vector<int> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) throw GraphError("coefficient matrix needs dimension >= 1");
  if (entries_.size() != dim_ * dim_) throw GraphError("coefficient matrix size mismatch");
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const int v = entries_[i * dim_ + j];
      if (v != 0 && v != 1) throw GraphError("coefficient matrix entries must be 0 or 1");
      if (v != entries_[j * dim_ + i]) throw GraphError("coefficient matrix must be symmetric");
    }
  }
}

std::size_t CoefficientMatrix::ones() const {
  std::size_t total = 0;
  for (int v : entries_) total += static_cast<std::size_t>(v);
  return total;
}

std::size_t CoefficientMatrix::row_sum(std::size_t i) const {
  std::size_t total = 0;
  for (std::size_t j = 0; j < dim_; ++j) total += static_cast<std::size_t>((*this)(i, j));
  return total;
}

DenseMatrix CoefficientMatrix::to_dense() const {
  return DenseMatrix(dim_, std::vector<double>(entries_.begin(), entries_.end()));
}

CoefficientMatrix coefficient_matrix_split(std::size_t p, std::size_t q) {
  validate(SplitParams{p, q});
  const std::size_t d = p + q;
  std::vector<int> e(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const bool row_copy = i < p;
      const bool col_copy = j < p;
      if (row_copy && col_copy) {
        e[i * d + j] = i == j ? 1 : 0;
      } else if (row_copy != col_copy) {
        e[i * d + j] = 1;
      }
    }
  }
  return CoefficientMatrix(d, std::move(e));
}

CoefficientMatrix coefficient_matrix_shadow(std::size_t c, std::size_t k) {
  validate(ShadowSplitParams{c, k});
  const std::size_t d = c + k;
  std::vector<int> e(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      e[i * d + j] = (i < c || j < c) ? 1 : 0;
    }
  }
  return CoefficientMatrix(d, std::move(e));
}

CoefficientMatrix coefficient_matrix_all_ones(std::size_t m) {
  if (m < 1) throw GraphError("shadow graph needs m >= 1");
  return CoefficientMatrix(m, std::vector<int>(m * m, 1));
}

Graph kron(const CoefficientMatrix& m, const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t d = m.dim();
  const std::size_t order = checked_product(d, n, "Kronecker construction");
  std::vector<std::uint8_t> adj(order * order, 0);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      if (m(a, b) == 0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const auto src = g.row(i);
        std::copy(src.begin(), src.end(), adj.begin() + (a * n + i) * order + b * n);
      }
    }
  }
  return Graph::from_adjacency(order, std::move(adj));
}

Graph generalized_splitting(const Graph& g, SplitParams params) {
  return kron(coefficient_matrix_split(params.p, params.q), g);
}

Graph shadow_splitting(const Graph& g, ShadowSplitParams params) {
  return kron(coefficient_matrix_shadow(params.c, params.k), g);
}

Graph m_shadow(const Graph& g, std::size_t m) { return kron(coefficient_matrix_all_ones(m), g); }

Graph m_splitting(const Graph& g, std::size_t m) {
  if (m < 1) throw GraphError("m-splitting needs m >= 1");
  return generalized_splitting(g, SplitParams{1, m});
}

Graph kronecker_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  const std::size_t order = checked_product(ng, nh, "Kronecker product");
  std::vector<std::uint8_t> adj(order * order, 0);
  for (std::size_t u1 = 0; u1 < ng; ++u1) {
    for (std::size_t u2 = 0; u2 < ng; ++u2) {
      if (!g.adjacent(u1, u2)) continue;
      for (std::size_t v1 = 0; v1 < nh; ++v1) {
        for (std::size_t v2 = 0; v2 < nh; ++v2) {
          if (h.adjacent(v1, v2)) adj[(u1 * nh + v1) * order + u2 * nh + v2] = 1;
        }
      }
    }
  }
  return Graph::from_adjacency(order, std::move(adj));
}

Graph construct_by_neighborhood(const Graph& g, SplitParams params) {
  validate(params);
  const std::size_t n = g.order();
  const std::size_t p = params.p;
  const std::size_t q = params.q;
  const std::size_t order = checked_product(p + q, n, "generalized splitting");
  auto copy_vertex = [n](std::size_t copy, std::size_t i) { return copy * n + i; };
  auto split_vertex = [n, p](std::size_t set, std::size_t i) { return (p + set) * n + i; };

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  // Each copy G^(l) keeps the edges of G and nothing else among copies.
  for (std::size_t l = 0; l < p; ++l) {
    for (auto [a, b] : g.edges()) edges.emplace_back(copy_vertex(l, a), copy_vertex(l, b));
  }
  // N(u_i^(s)) is the union over copies l of N_{G^(l)}(v_i^(l)).
  for (std::size_t s = 0; s < q; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < p; ++l) {
        for (std::size_t j : g.neighbors(i)) {
          edges.emplace_back(split_vertex(s, i), copy_vertex(l, j));
        }
      }
    }
  }
  return Graph::from_edges(order, edges);
}

Graph construct_by_neighborhood(const Graph& g, ShadowSplitParams params) {
  validate(params);
  const std::size_t n = g.order();
  const std::size_t c = params.c;
  const std::size_t k = params.k;
  const std::size_t order = checked_product(c + k, n, "shadow-splitting");
  auto copy_vertex = [n](std::size_t copy, std::size_t i) { return copy * n + i; };
  auto split_vertex = [n, c](std::size_t set, std::size_t i) { return (c + set) * n + i; };

  // N(v_i^(s)) = union over v_j in N_G(v_i) of all copies v_j^(*) and all u_j^(*).
  // N(u_i^(r)) follows by symmetry; adding each edge once from the copy side
  // covers both rules.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t s = 0; s < c; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j : g.neighbors(i)) {
        for (std::size_t s2 = 0; s2 < c; ++s2) {
          const auto a = copy_vertex(s, i);
          const auto b = copy_vertex(s2, j);
          if (a < b) edges.emplace_back(a, b);
        }
        for (std::size_t r = 0; r < k; ++r) edges.emplace_back(copy_vertex(s, i), split_vertex(r, j));
      }
    }
  }
  return Graph::from_edges(order, edges);
}

Graph construct_by_neighborhood(const Graph& g, const OperatorParams& params) {
  return std::visit([&g](auto p) { return construct_by_neighborhood(g, p); }, params);
}

Graph m_shadow_by_definition(const Graph& g, std::size_t m) {
  if (m < 1) throw GraphError("shadow graph needs m >= 1");
  const std::size_t n = g.order();
  const std::size_t order = checked_product(m, n, "shadow graph");
  // u in G_i joins every neighbor of its counterpart in every G_j.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (auto [a, b] : g.edges()) {
        const std::size_t x = i * n + a;
        const std::size_t y = j * n + b;
        edges.emplace_back(x, y);
      }
    }
  }
  return Graph::from_edges(order, edges);
}

std::size_t block_count(const OperatorParams& params) {
  if (const auto* s = std::get_if<SplitParams>(&params)) return s->p + s->q;
  const auto& h = std::get<ShadowSplitParams>(params);
  return h.c + h.k;
}

std::string describe(const OperatorParams& params) {
  if (const auto* s = std::get_if<SplitParams>(&params)) {
    return "S_{" + std::to_string(s->p) + "," + std::to_string(s->q) + "}";
  }
  const auto& h = std::get<ShadowSplitParams>(params);
  return "H_{" + std::to_string(h.c) + "," + std::to_string(h.k) + "}";
}

}  // namespace splitgraph
