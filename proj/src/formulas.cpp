#include "splitgraph/formulas.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "splitgraph/constructions.hpp"

namespace splitgraph {

double split_energy_factor(std::size_t p, std::size_t q) {
  validate(SplitParams{p, q});
  const double pq = static_cast<double>(p) * static_cast<double>(q);
  return static_cast<double>(p) - 1.0 + std::sqrt(1.0 + 4.0 * pq);
}

double shadow_split_energy_factor(std::size_t c, std::size_t k) {
  validate(ShadowSplitParams{c, k});
  const double cd = static_cast<double>(c);
  return std::sqrt(cd * cd + 4.0 * cd * static_cast<double>(k));
}

Spectrum split_coefficient_spectrum(std::size_t p, std::size_t q) {
  validate(SplitParams{p, q});
  const double root = std::sqrt(1.0 + 4.0 * static_cast<double>(p) * static_cast<double>(q));
  std::vector<double> values;
  values.reserve(p + q);
  values.insert(values.end(), p - 1, 1.0);
  values.insert(values.end(), q - 1, 0.0);
  values.push_back((1.0 + root) / 2.0);
  values.push_back((1.0 - root) / 2.0);
  return Spectrum(std::move(values));
}

Spectrum shadow_coefficient_spectrum(std::size_t c, std::size_t k) {
  validate(ShadowSplitParams{c, k});
  const double cd = static_cast<double>(c);
  const double root = std::sqrt(cd * cd + 4.0 * cd * static_cast<double>(k));
  std::vector<double> values(c + k - 2, 0.0);
  values.push_back((cd + root) / 2.0);
  values.push_back((cd - root) / 2.0);
  return Spectrum(std::move(values));
}

std::string to_string(TheoremSource source) {
  switch (source) {
    case TheoremSource::kSplitting: return "generalized-splitting";
    case TheoremSource::kShadowSplitting: return "shadow-splitting";
    case TheoremSource::kShadow: return "shadow";
    case TheoremSource::kKronecker: return "kronecker";
    case TheoremSource::kComplete: return "complete";
    case TheoremSource::kCompleteBipartite: return "complete-bipartite";
    case TheoremSource::kIdentity: return "identity";
  }
  return "unknown";
}

EnergyPrediction predict_split(std::size_t p, std::size_t q) {
  return {split_energy_factor(p, q), TheoremSource::kSplitting, {p, q}};
}

EnergyPrediction predict_shadow_split(std::size_t c, std::size_t k) {
  return {shadow_split_energy_factor(c, k), TheoremSource::kShadowSplitting, {c, k}};
}

double known_energy(const KnownFamily& family) {
  struct Visitor {
    double operator()(const CompleteFamily& f) const {
      if (f.n < 1) throw std::invalid_argument("complete family needs n >= 1");
      return 2.0 * (static_cast<double>(f.n) - 1.0);
    }
    double operator()(const CompleteBipartiteFamily& f) const {
      if (f.m < 1 || f.n < 1) throw std::invalid_argument("complete bipartite needs m, n >= 1");
      return 2.0 * std::sqrt(static_cast<double>(f.m) * static_cast<double>(f.n));
    }
    double operator()(const ShadowFamily& f) const {
      if (f.m < 1) throw std::invalid_argument("shadow family needs m >= 1");
      return static_cast<double>(f.m) * f.base_energy;
    }
    double operator()(const KroneckerFamily& f) const { return f.first_energy * f.second_energy; }
  };
  return std::visit(Visitor{}, family);
}

KnownFamily parse_known_family(const std::string& label) {
  std::string normalized = label;
  for (char& ch : normalized) {
    if (ch == ':') ch = ' ';
  }
  std::istringstream in(normalized);
  std::string name;
  in >> name;
  auto read = [&](const char* what) {
    long long v = 0;
    if (!(in >> v) || v < 1) {
      throw std::invalid_argument("family '" + label + "': expected positive " + what);
    }
    return static_cast<std::size_t>(v);
  };
  KnownFamily out;
  if (name == "complete" || name == "K") {
    out = CompleteFamily{read("n")};
  } else if (name == "complete-bipartite" || name == "bipartite") {
    const auto m = read("m");
    out = CompleteBipartiteFamily{m, read("n")};
  } else {
    throw std::invalid_argument("unknown family label '" + label + "'");
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("family '" + label + "': trailing input");
  return out;
}

std::optional<double> closed_form_energy(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t m = g.edge_count().value;
  if (m == 0) return 0.0;
  if (m == n * (n - 1) / 2) return known_energy(CompleteFamily{n});
  // Candidate bipartition: non-neighbors of vertex 0 versus its neighbors.
  std::vector<bool> side(n);
  std::size_t left = 0;
  for (std::size_t v = 0; v < n; ++v) {
    side[v] = g.adjacent(0, v);
    if (!side[v]) ++left;
  }
  const std::size_t right = n - left;
  if (right == 0 || m != left * right) return std::nullopt;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) != (side[u] != side[v])) return std::nullopt;
    }
  }
  return known_energy(CompleteBipartiteFamily{left, right});
}

double base_energy(const Graph& g) {
  if (auto closed = closed_form_energy(g)) return *closed;
  return energy(g).value;
}

DenseMatrix quotient_matrix(const DenseMatrix& matrix,
                            std::span<const std::vector<std::size_t>> partition) {
  const std::size_t n = matrix.dim();
  if (partition.empty()) throw PartitionError("partition has no blocks");
  std::vector<std::size_t> owner(n, partition.size());
  for (std::size_t b = 0; b < partition.size(); ++b) {
    if (partition[b].empty()) throw PartitionError("partition block " + std::to_string(b) + " is empty");
    for (std::size_t v : partition[b]) {
      if (v >= n) throw PartitionError("partition index " + std::to_string(v) + " out of range");
      if (owner[v] != partition.size()) {
        throw PartitionError("index " + std::to_string(v) + " appears in two blocks");
      }
      owner[v] = b;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (owner[v] == partition.size()) {
      throw PartitionError("index " + std::to_string(v) + " is not covered by the partition");
    }
  }
  const std::size_t k = partition.size();
  DenseMatrix q(k);
  for (std::size_t bi = 0; bi < k; ++bi) {
    for (std::size_t bj = 0; bj < k; ++bj) {
      bool first = true;
      double common = 0.0;
      for (std::size_t row : partition[bi]) {
        double sum = 0.0;
        for (std::size_t col : partition[bj]) sum += matrix(row, col);
        if (first) {
          common = sum;
          first = false;
        } else if (sum != common) {
          throw PartitionError("partition is not equitable: block (" + std::to_string(bi) +
                               ", " + std::to_string(bj) + ") has unequal row sums");
        }
      }
      q(bi, bj) = common;
    }
  }
  return q;
}

Spectrum quotient_matrix_spectrum(const DenseMatrix& matrix,
                                  std::span<const std::vector<std::size_t>> partition) {
  if (matrix.asymmetry() > 0.0) {
    throw AsymmetricMatrixError("quotient_matrix_spectrum: matrix is not symmetric");
  }
  const DenseMatrix q = quotient_matrix(matrix, partition);
  const std::size_t k = q.dim();
  // For symmetric input, |C_i| q_ij = |C_j| q_ji, so D^{1/2} Q D^{-1/2} is
  // symmetric and similar to Q.
  DenseMatrix sym(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const double ci = static_cast<double>(partition[i].size());
      const double cj = static_cast<double>(partition[j].size());
      sym(i, j) = q(i, j) * std::sqrt(ci / cj);
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double avg = 0.5 * (sym(i, j) + sym(j, i));
      sym(i, j) = sym(j, i) = avg;
    }
  }
  return eigenvalues_symmetric(sym);
}

}  // namespace splitgraph
