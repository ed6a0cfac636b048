#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "splitgraph/graph.hpp"
#include "splitgraph/matrix.hpp"
#include "splitgraph/spectral.hpp"

namespace splitgraph {

// Closed-form energy multipliers. E(operator(G)) = factor * E(G).

/// p - 1 + sqrt(1 + 4pq)
double split_energy_factor(std::size_t p, std::size_t q);
/// sqrt(c^2 + 4ck)
double shadow_split_energy_factor(std::size_t c, std::size_t k);

/// {1 x (p-1), 0 x (q-1), (1 +- sqrt(1+4pq)) / 2}
Spectrum split_coefficient_spectrum(std::size_t p, std::size_t q);
/// {0 x (c+k-2), (c +- sqrt(c^2+4ck)) / 2}
Spectrum shadow_coefficient_spectrum(std::size_t c, std::size_t k);

enum class TheoremSource { kSplitting, kShadowSplitting, kShadow, kKronecker, kComplete,
                           kCompleteBipartite, kIdentity };

std::string to_string(TheoremSource source);

struct EnergyPrediction {
  double scale_factor = 1.0;
  TheoremSource source = TheoremSource::kIdentity;
  std::vector<std::size_t> parameters;
};

EnergyPrediction predict_split(std::size_t p, std::size_t q);
EnergyPrediction predict_shadow_split(std::size_t c, std::size_t k);

// Families with a known closed-form energy.
struct CompleteFamily {
  std::size_t n;
};
struct CompleteBipartiteFamily {
  std::size_t m;
  std::size_t n;
};
/// D_m(G): the value is m * base_energy.
struct ShadowFamily {
  std::size_t m;
  double base_energy;
};
/// G (x) H: the value is E(G) * E(H).
struct KroneckerFamily {
  double first_energy;
  double second_energy;
};

using KnownFamily =
    std::variant<CompleteFamily, CompleteBipartiteFamily, ShadowFamily, KroneckerFamily>;

double known_energy(const KnownFamily& family);

/// Parses "complete N", "complete-bipartite M N" (also "complete:N",
/// "bipartite:M:N"). Throws std::invalid_argument on an unknown label.
KnownFamily parse_known_family(const std::string& label);

/// Recognizes edgeless graphs, K_n and K_{m,n} (in any vertex order). Returns
/// their closed-form energy.
std::optional<double> closed_form_energy(const Graph& g);

/// Energy of a base graph for formula-route predictions: closed form where
/// recognized, otherwise a direct eigensolve of the (small) base.
double base_energy(const Graph& g);

class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Spectrum of the quotient matrix of a symmetric matrix under an equitable
/// partition. Row sums must agree exactly within each block.
Spectrum quotient_matrix_spectrum(const DenseMatrix& matrix,
                                  std::span<const std::vector<std::size_t>> partition);

/// The k x k quotient matrix itself (generally not symmetric).
DenseMatrix quotient_matrix(const DenseMatrix& matrix,
                            std::span<const std::vector<std::size_t>> partition);

}  // namespace splitgraph
