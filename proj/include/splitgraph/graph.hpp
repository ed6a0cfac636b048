#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace splitgraph {

/// Default upper bound on the order of any graph held densely.
inline constexpr std::size_t kDefaultMaxOrder = 20000;

/// Environment variable that overrides kDefaultMaxOrder.
inline constexpr const char* kMaxOrderEnvVar = "SPECTRAL_MAX_ORDER";

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a graph (or a graph about to be built) exceeds the dense cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(std::size_t requested, std::size_t cap, const std::string& what);

  std::size_t requested_order() const { return requested_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// Current dense cap: SPECTRAL_MAX_ORDER if set to a positive integer,
/// otherwise kDefaultMaxOrder.
std::size_t max_order();

/// Throws CapExceededError if `order` is above max_order().
void check_order(std::size_t order, const std::string& what);

struct EdgeCount {
  std::size_t value = 0;
  friend bool operator==(const EdgeCount&, const EdgeCount&) = default;
};

/// Simple undirected graph with a dense 0/1 adjacency matrix.
///
/// Values are immutable once built. The adjacency is stored row-major with
/// one byte per entry; it is always symmetric with a zero diagonal.
class Graph {
 public:
  /// Edgeless graph on `order` vertices.
  static Graph empty(std::size_t order);

  /// Validates symmetry, zero diagonal and 0/1 entries.
  static Graph from_adjacency(std::size_t order, std::vector<std::uint8_t> adjacency);

  /// Builds a graph from 0-based undirected edges. Rejects loops; repeated
  /// edges are rejected as well since multigraphs are not representable.
  static Graph from_edges(std::size_t order,
                          std::span<const std::pair<std::size_t, std::size_t>> edges);

  std::size_t order() const { return order_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u * order_ + v] != 0; }
  std::span<const std::uint8_t> row(std::size_t u) const {
    return {adjacency_.data() + u * order_, order_};
  }
  const std::vector<std::uint8_t>& adjacency() const { return adjacency_; }

  std::size_t degree(std::size_t v) const;
  std::vector<std::size_t> degrees() const;
  EdgeCount edge_count() const;
  std::vector<std::size_t> neighbors(std::size_t v) const;

  /// Undirected edges (u < v) in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(std::size_t order, std::vector<std::uint8_t> adjacency)
      : order_(order), adjacency_(std::move(adjacency)) {}

  std::size_t order_ = 0;
  std::vector<std::uint8_t> adjacency_;
};

Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t m, std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

/// Block-diagonal union, parts laid out in list order.
Graph disjoint_union(std::span<const Graph> parts);

/// Erdos-Renyi G(n, p) sample. Test and tooling helper.
Graph random_graph(std::size_t n, double edge_probability, std::mt19937_64& rng);

/// Relabels vertex v as perm[v].
Graph permute_vertices(const Graph& g, std::span<const std::size_t> perm);

}  // namespace splitgraph
