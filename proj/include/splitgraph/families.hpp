#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "splitgraph/constructions.hpp"
#include "splitgraph/graph.hpp"

namespace splitgraph {

/// The equienergetic (5.x) and borderenergetic (6.x) constructions.
enum class CorollaryId {
  kC5_1, kC5_2, kC5_3, kC5_4, kC5_5, kC5_6, kC5_7, kC5_8, kC5_9,
  kC6_1, kC6_2, kC6_3,
};

std::string_view to_string(CorollaryId id);
/// Accepts "C5_1", "c5_1", "5.1" and "C5.1".
CorollaryId parse_corollary(std::string_view text);
std::vector<CorollaryId> all_corollaries();

bool is_borderenergetic(CorollaryId id);

/// Names of the integer parameters each corollary is instantiated with.
const std::vector<std::string>& free_parameters(CorollaryId id);

/// Whether the corollary's statement is about an arbitrary base graph G.
bool takes_base_graph(CorollaryId id);

using ParameterMap = std::map<std::string, long long>;

/// Raised for parameters outside a corollary's domain or a missing/extra
/// binding.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FamilySpec {
  CorollaryId corollary = CorollaryId::kC5_6;
  ParameterMap parameters;
  /// G for the 5.x corollaries (C_4 when unset). Ignored by 6.x, which fix
  /// their own base.
  std::optional<Graph> base;
  /// Second member of the equienergetic base pair for C5_1. When both bases
  /// are unset C5_1 uses K_{1,4} and C_4 u K_1.
  std::optional<Graph> second_base;
};

/// m copies with adjacency kron(J_m, A).
struct ShadowCopies {
  std::size_t m = 1;
};

/// Tensor product with a fixed factor graph.
struct KroneckerWith {
  std::string label;
  Graph factor;
  bool factor_first = false;
};

using MemberOperator = std::variant<SplitParams, ShadowSplitParams, ShadowCopies, KroneckerWith>;

struct MemberPlan {
  std::string description;
  std::size_t base_index = 0;
  MemberOperator op;
  std::size_t order = 0;
};

/// Everything needed to build and check a family, computed without
/// allocating any member graph.
struct FamilyPlan {
  CorollaryId corollary;
  ParameterMap parameters;
  std::vector<Graph> bases;
  std::vector<std::string> base_labels;
  /// Closed-form E(base) where one is known for the base.
  std::vector<std::optional<double>> base_closed_form;
  std::vector<MemberPlan> members;
  /// Members that must be mutually equienergetic and of equal order.
  std::vector<std::vector<std::size_t>> groups;
};

/// Validates the domain, precomputes orders and checks them against the
/// dense cap.
FamilyPlan plan_family(const FamilySpec& spec);

Graph build_member(const FamilyPlan& plan, const MemberPlan& member);

std::vector<Graph> instantiate_family(const FamilySpec& spec);

/// Closed-form multiplier E(member) / E(base) for an operator.
double predicted_factor(const MemberOperator& op);

/// K_{1,4} and C_4 u K_1.
std::pair<Graph, Graph> canonical_equienergetic_pair();

enum class Method { kFormula, kOracle, kBoth };
std::string_view to_string(Method method);
Method parse_method(std::string_view text);

struct VerifyOptions {
  Method method = Method::kBoth;
  /// Overrides the order-scaled default tolerance.
  std::optional<double> tolerance;
};

struct MemberResult {
  std::string description;
  std::size_t order = 0;
  std::size_t edges = 0;
  std::optional<double> predicted_energy;
  std::optional<double> measured_energy;
  /// 2(order - 1), set for borderenergetic families.
  std::optional<double> target_energy;
  std::optional<double> trace;
  std::optional<double> sum_of_squares;
};

struct CospectralFlag {
  std::size_t first = 0;
  std::size_t second = 0;
  bool cospectral = false;
};

struct VerificationReport {
  CorollaryId corollary = CorollaryId::kC5_6;
  bool borderenergetic = false;
  Method method = Method::kBoth;
  ParameterMap parameters;
  std::vector<std::string> base_labels;
  std::vector<MemberResult> members;
  std::vector<std::vector<std::size_t>> groups;
  double tolerance = 0.0;
  bool orders_equal = false;
  bool energies_equal = false;
  /// Present when both routes ran.
  std::optional<bool> formula_matches_oracle;
  /// Present for borderenergetic families.
  std::optional<bool> energy_equals_complete;
  /// Present when oracle spectra were computed.
  std::optional<bool> spectral_identities_hold;
  std::vector<CospectralFlag> cospectral;
  bool pass = false;
  /// Set when the grid point could not be evaluated at all.
  std::optional<std::string> error;
};

VerificationReport verify_equienergetic(const FamilySpec& spec, const VerifyOptions& options = {});
VerificationReport verify_borderenergetic(const FamilySpec& spec, const VerifyOptions& options = {});

/// Dispatches on the corollary kind.
VerificationReport verify_family(const FamilySpec& spec, const VerifyOptions& options = {});

}  // namespace splitgraph
