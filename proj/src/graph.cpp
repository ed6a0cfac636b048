#include "splitgraph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string_view>

namespace splitgraph {

CapExceededError::CapExceededError(std::size_t requested, std::size_t cap, const std::string& what)
    : std::runtime_error(what + ": order " + std::to_string(requested) +
                         " exceeds the dense cap of " + std::to_string(cap) + " (set " +
                         kMaxOrderEnvVar + " to raise it)"),
      requested_(requested),
      cap_(cap) {}

std::size_t max_order() {
  const char* raw = std::getenv(kMaxOrderEnvVar);
  if (raw == nullptr) return kDefaultMaxOrder;
  std::string_view text(raw);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    return kDefaultMaxOrder;
  }
  return value;
}

void check_order(std::size_t order, const std::string& what) {
  const std::size_t cap = max_order();
  if (order > cap) throw CapExceededError(order, cap, what);
}

Graph Graph::empty(std::size_t order) {
  if (order == 0) throw GraphError("graph order must be at least 1");
  check_order(order, "graph");
  return Graph(order, std::vector<std::uint8_t>(order * order, 0));
}

Graph Graph::from_adjacency(std::size_t order, std::vector<std::uint8_t> adjacency) {
  if (order == 0) throw GraphError("graph order must be at least 1");
  check_order(order, "graph");
  if (adjacency.size() != order * order) {
    throw GraphError("adjacency size does not match order " + std::to_string(order));
  }
  for (std::size_t i = 0; i < order; ++i) {
    if (adjacency[i * order + i] != 0) {
      throw GraphError("self-loop at vertex " + std::to_string(i));
    }
    for (std::size_t j = 0; j < order; ++j) {
      const auto a = adjacency[i * order + j];
      if (a > 1) throw GraphError("adjacency entries must be 0 or 1");
      if (a != adjacency[j * order + i]) {
        throw GraphError("adjacency is not symmetric at (" + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
      }
    }
  }
  return Graph(order, std::move(adjacency));
}

Graph Graph::from_edges(std::size_t order,
                        std::span<const std::pair<std::size_t, std::size_t>> edges) {
  Graph g = empty(order);
  for (auto [u, v] : edges) {
    if (u >= order || v >= order) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range for order " + std::to_string(order));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    auto& entry = g.adjacency_[u * order + v];
    if (entry != 0) {
      throw GraphError("repeated edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    entry = 1;
    g.adjacency_[v * order + u] = 1;
  }
  return g;
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (auto a : row(v)) d += a;
  return d;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(order_);
  for (std::size_t v = 0; v < order_; ++v) out[v] = degree(v);
  return out;
}

EdgeCount Graph::edge_count() const {
  std::size_t total = 0;
  for (auto a : adjacency_) total += a;
  return EdgeCount{total / 2};
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < order_; ++u) {
    if (adjacent(v, u)) out.push_back(u);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < order_; ++u) {
    for (std::size_t v = u + 1; v < order_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph complete_graph(std::size_t n) {
  if (n == 0) throw GraphError("complete graph needs n >= 1");
  check_order(n, "complete graph");
  std::vector<std::uint8_t> adj(n * n, 1);
  for (std::size_t i = 0; i < n; ++i) adj[i * n + i] = 0;
  return Graph::from_adjacency(n, std::move(adj));
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw GraphError("complete bipartite graph needs both parts >= 1");
  const std::size_t order = m + n;
  check_order(order, "complete bipartite graph");
  std::vector<std::uint8_t> adj(order * order, 0);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      adj[i * order + j] = (i < m) != (j < m) ? 1 : 0;
    }
  }
  return Graph::from_adjacency(order, std::move(adj));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle graph needs n >= 3");
  check_order(n, "cycle graph");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  if (n == 0) throw GraphError("path graph needs n >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) throw GraphError("disjoint union of an empty list");
  std::size_t order = 0;
  for (const auto& part : parts) order += part.order();
  check_order(order, "disjoint union");
  std::vector<std::uint8_t> adj(order * order, 0);
  std::size_t offset = 0;
  for (const auto& part : parts) {
    const std::size_t n = part.order();
    for (std::size_t i = 0; i < n; ++i) {
      const auto src = part.row(i);
      std::copy(src.begin(), src.end(), adj.begin() + (offset + i) * order + offset);
    }
    offset += n;
  }
  return Graph::from_adjacency(order, std::move(adj));
}

Graph random_graph(std::size_t n, double edge_probability, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph permute_vertices(const Graph& g, std::span<const std::size_t> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw GraphError("permutation length does not match graph order");
  std::vector<std::uint8_t> seen(n, 0);
  for (auto p : perm) {
    if (p >= n || seen[p] != 0) throw GraphError("not a permutation");
    seen[p] = 1;
  }
  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      adj[perm[u] * n + perm[v]] = g.adjacent(u, v) ? 1 : 0;
    }
  }
  return Graph::from_adjacency(n, std::move(adj));
}

}  // namespace splitgraph
