#include "splitgraph/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>

#include "splitgraph/formulas.hpp"
#include "splitgraph/spectral.hpp"

namespace splitgraph {
namespace {

struct CorollaryInfo {
  CorollaryId id;
  std::string_view name;
  std::vector<std::string> parameters;
  bool borderenergetic;
  bool base_graph;
};

const std::vector<CorollaryInfo>& corollary_table() {
  static const std::vector<CorollaryInfo> table = {
      {CorollaryId::kC5_1, "C5_1", {"p", "q", "c", "k"}, false, true},
      {CorollaryId::kC5_2, "C5_2", {"t", "m", "k"}, false, true},
      {CorollaryId::kC5_3, "C5_3", {"m", "t"}, false, true},
      {CorollaryId::kC5_4, "C5_4", {"p", "q"}, false, true},
      {CorollaryId::kC5_5, "C5_5", {"c", "k"}, false, true},
      {CorollaryId::kC5_6, "C5_6", {}, false, true},
      {CorollaryId::kC5_7, "C5_7", {"m"}, false, true},
      {CorollaryId::kC5_8, "C5_8", {"m"}, false, true},
      {CorollaryId::kC5_9, "C5_9", {"t"}, false, true},
      {CorollaryId::kC6_1, "C6_1", {"k"}, true, false},
      {CorollaryId::kC6_2, "C6_2", {"t"}, true, false},
      {CorollaryId::kC6_3, "C6_3", {"t"}, true, false},
  };
  return table;
}

const CorollaryInfo& info(CorollaryId id) {
  for (const auto& row : corollary_table()) {
    if (row.id == id) return row;
  }
  throw DomainError("unknown corollary");
}

std::size_t multiply_checked(std::size_t a, std::size_t b, const std::string& what) {
  std::size_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw CapExceededError(std::numeric_limits<std::size_t>::max(), max_order(), what);
  }
  return out;
}

std::size_t positive(long long value, const std::string& what) {
  if (value < 1) {
    throw DomainError(what + " = " + std::to_string(value) + " must be at least 1");
  }
  return static_cast<std::size_t>(value);
}

/// Number of vertices in the operator's output for a base of order n.
std::size_t operator_order(const MemberOperator& op, std::size_t n, const std::string& what) {
  struct Visitor {
    std::size_t n;
    const std::string& what;
    std::size_t operator()(const SplitParams& s) const { return multiply_checked(s.p + s.q, n, what); }
    std::size_t operator()(const ShadowSplitParams& h) const {
      return multiply_checked(h.c + h.k, n, what);
    }
    std::size_t operator()(const ShadowCopies& d) const { return multiply_checked(d.m, n, what); }
    std::size_t operator()(const KroneckerWith& k) const {
      return multiply_checked(k.factor.order(), n, what);
    }
  };
  return std::visit(Visitor{n, what}, op);
}

std::size_t operator_edge_count(const MemberOperator& op, std::size_t base_edges) {
  struct Visitor {
    std::size_t e;
    std::size_t operator()(const SplitParams& s) const { return (s.p + 2 * s.p * s.q) * e; }
    std::size_t operator()(const ShadowSplitParams& h) const {
      return (h.c * h.c + 2 * h.c * h.k) * e;
    }
    std::size_t operator()(const ShadowCopies& d) const { return d.m * d.m * e; }
    std::size_t operator()(const KroneckerWith& k) const {
      return 2 * k.factor.edge_count().value * e;
    }
  };
  return std::visit(Visitor{base_edges}, op);
}

std::string describe_member(const MemberOperator& op, const std::string& base) {
  struct Visitor {
    const std::string& base;
    std::string operator()(const SplitParams& s) const {
      return "S_{" + std::to_string(s.p) + "," + std::to_string(s.q) + "}(" + base + ")";
    }
    std::string operator()(const ShadowSplitParams& h) const {
      return "H_{" + std::to_string(h.c) + "," + std::to_string(h.k) + "}(" + base + ")";
    }
    std::string operator()(const ShadowCopies& d) const {
      return "D_{" + std::to_string(d.m) + "}(" + base + ")";
    }
    std::string operator()(const KroneckerWith& k) const {
      return k.factor_first ? k.label + " (x) " + base : base + " (x) " + k.label;
    }
  };
  return std::visit(Visitor{base}, op);
}

KroneckerWith kron_complete(std::size_t n) {
  return {"K_" + std::to_string(n), complete_graph(n), false};
}

KroneckerWith kron_balanced_bipartite(std::size_t r, bool factor_first) {
  return {"K_{" + std::to_string(r) + "," + std::to_string(r) + "}", complete_bipartite(r, r),
          factor_first};
}

void check_bindings(CorollaryId id, const ParameterMap& params) {
  const auto& expected = info(id).parameters;
  for (const auto& name : expected) {
    if (!params.contains(name)) {
      throw DomainError(std::string(to_string(id)) + ": missing parameter '" + name + "'");
    }
  }
  for (const auto& [name, value] : params) {
    if (std::find(expected.begin(), expected.end(), name) == expected.end()) {
      throw DomainError(std::string(to_string(id)) + ": unexpected parameter '" + name + "'");
    }
  }
}

/// Kronecker factors are tiny graphs whose order is known before they are
/// built; check the member order arithmetically first.
void check_kron_order(std::size_t factor_order, std::size_t n, const std::string& what) {
  check_order(multiply_checked(factor_order, n, what), what);
}

}  // namespace

std::string_view to_string(CorollaryId id) { return info(id).name; }

CorollaryId parse_corollary(std::string_view text) {
  std::string norm;
  for (char ch : text) {
    if (ch == '.') ch = '_';
    norm.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  }
  if (!norm.empty() && norm.front() != 'C') norm.insert(norm.begin(), 'C');
  for (const auto& row : corollary_table()) {
    if (row.name == norm) return row.id;
  }
  throw DomainError("unknown corollary '" + std::string(text) + "'");
}

std::vector<CorollaryId> all_corollaries() {
  std::vector<CorollaryId> out;
  for (const auto& row : corollary_table()) out.push_back(row.id);
  return out;
}

bool is_borderenergetic(CorollaryId id) { return info(id).borderenergetic; }

const std::vector<std::string>& free_parameters(CorollaryId id) { return info(id).parameters; }

bool takes_base_graph(CorollaryId id) { return info(id).base_graph; }

std::pair<Graph, Graph> canonical_equienergetic_pair() {
  const std::array<Graph, 2> parts = {cycle_graph(4), Graph::empty(1)};
  return {complete_bipartite(1, 4), disjoint_union(parts)};
}

FamilyPlan plan_family(const FamilySpec& spec) {
  const CorollaryId id = spec.corollary;
  check_bindings(id, spec.parameters);
  const auto& prm = spec.parameters;
  auto get = [&](const std::string& name) { return prm.at(name); };
  const std::string cname(to_string(id));

  FamilyPlan plan{id, prm, {}, {}, {}, {}, {}};

  if (id == CorollaryId::kC5_1) {
    if (spec.base.has_value() != spec.second_base.has_value()) {
      throw DomainError("C5_1 needs both members of the base pair or neither");
    }
    if (spec.base) {
      plan.bases = {*spec.base, *spec.second_base};
      plan.base_labels = {"G1", "G2"};
    } else {
      auto [a, b] = canonical_equienergetic_pair();
      plan.bases = {a, b};
      plan.base_labels = {"K_{1,4}", "C_4 u K_1"};
    }
    if (plan.bases[0].order() != plan.bases[1].order()) {
      throw DomainError("C5_1 base pair must have equal order");
    }
  } else if (takes_base_graph(id)) {
    if (spec.base) {
      plan.bases = {*spec.base};
      plan.base_labels = {"G"};
    } else {
      plan.bases = {cycle_graph(4)};
      plan.base_labels = {"C_4"};
    }
  }

  auto add = [&](MemberOperator op, std::size_t base_index, std::size_t base_order) {
    MemberPlan member;
    member.base_index = base_index;
    member.description = describe_member(op, plan.base_labels.empty()
                                                 ? std::string("G")
                                                 : plan.base_labels[base_index]);
    member.order = operator_order(op, base_order, cname + " " + member.description);
    check_order(member.order, cname + " member " + member.description);
    member.op = std::move(op);
    plan.members.push_back(std::move(member));
  };

  const std::size_t n = plan.bases.empty() ? 0 : plan.bases[0].order();
  switch (id) {
    case CorollaryId::kC5_1: {
      const SplitParams s{positive(get("p"), "p"), positive(get("q"), "q")};
      const ShadowSplitParams h{positive(get("c"), "c"), positive(get("k"), "k")};
      add(s, 0, n);
      add(s, 1, n);
      add(h, 0, n);
      add(h, 1, n);
      plan.groups = {{0, 1}, {2, 3}};
      break;
    }
    case CorollaryId::kC5_2: {
      const long long t = get("t");
      const long long m = get("m");
      const long long k = get("k");
      positive(t, "t");
      positive(m, "m");
      if (k != 1 && k != -1) throw DomainError("C5_2: k must be 1 or -1");
      const long long a = 5 * t - 2;
      const long long b = 2 * t - 1;
      const SplitParams first{positive(a * a * m + k * a, "p1"), positive(m, "q1")};
      const SplitParams second{positive(5 * t * t * m + k * t, "p2"),
                               positive(5 * b * b * m + k * (4 * t - 2), "q2")};
      add(first, 0, n);
      add(second, 0, n);
      plan.groups = {{0, 1}};
      break;
    }
    case CorollaryId::kC5_3: {
      const long long m = get("m");
      const long long t = get("t");
      positive(t, "t");
      if (m <= t) throw DomainError("C5_3: requires m > t >= 1");
      add(ShadowSplitParams{positive(m + t, "c1"), positive(2 * m - t, "k1")}, 0, n);
      add(ShadowSplitParams{positive(3 * m - t, "c2"), positive(t, "k2")}, 0, n);
      plan.groups = {{0, 1}};
      break;
    }
    case CorollaryId::kC5_4: {
      const auto p = positive(get("p"), "p");
      const auto q = positive(get("q"), "q");
      add(SplitParams{p, q}, 0, n);
      add(ShadowCopies{p + q}, 0, n);
      plan.groups = {{0, 1}};
      break;
    }
    case CorollaryId::kC5_5: {
      const auto c = positive(get("c"), "c");
      const auto k = positive(get("k"), "k");
      add(ShadowSplitParams{c, k}, 0, n);
      add(ShadowCopies{c + k}, 0, n);
      plan.groups = {{0, 1}};
      break;
    }
    case CorollaryId::kC5_6: {
      add(SplitParams{2, 1}, 0, n);
      check_kron_order(3, n, cname);
      add(kron_complete(3), 0, n);
      plan.groups = {{0, 1}};
      break;
    }
    case CorollaryId::kC5_7: {
      const long long m = get("m");
      positive(m, "m");
      add(SplitParams{positive(2 * m, "p"), positive(8 * m - 2, "q")}, 0, n);
      const auto r = positive(5 * m - 1, "r");
      check_kron_order(2 * r, n, cname);
      add(kron_balanced_bipartite(r, false), 0, n);
      plan.groups = {{0, 1}};
      break;
    }
    case CorollaryId::kC5_8: {
      const long long m = get("m");
      positive(m, "m");
      add(SplitParams{positive(3 * m + 1, "p"), positive(12 * m + 2, "q")}, 0, n);
      add(ShadowSplitParams{positive(5 * m + 1, "c"), positive(10 * m + 2, "k")}, 0, n);
      plan.groups = {{0, 1}};
      break;
    }
    case CorollaryId::kC5_9: {
      const long long t = get("t");
      positive(t, "t");
      add(ShadowSplitParams{positive(10 * t - 4, "c"), positive(20 * t - 8, "k")}, 0, n);
      add(ShadowCopies{positive(30 * t - 12, "m")}, 0, n);
      const auto r = positive(15 * t - 6, "r");
      check_kron_order(2 * r, n, cname);
      add(kron_balanced_bipartite(r, true), 0, n);
      add(SplitParams{positive(6 * t - 2, "p"), positive(24 * t - 10, "q")}, 0, n);
      plan.groups = {{0, 1, 2, 3}};
      break;
    }
    case CorollaryId::kC6_1: {
      const long long k = get("k");
      positive(k, "k");
      plan.base_labels = {"K_3"};
      add(SplitParams{positive(k + 1, "p"), positive(k, "q")}, 0, 3);
      add(SplitParams{positive(9 * k + 6, "p"), positive(k + 1, "q")}, 0, 3);
      plan.bases = {complete_graph(3)};
      plan.groups = {{0}, {1}};
      break;
    }
    case CorollaryId::kC6_2:
    case CorollaryId::kC6_3: {
      const long long t = get("t");
      positive(t, "t");
      const auto tt = static_cast<std::size_t>(t);
      const ShadowSplitParams h{multiply_checked(tt + 1, tt + 1, cname),
                                multiply_checked(tt, 2 * tt + 1, cname)};
      const std::size_t r = 3 * tt + 4;
      if (id == CorollaryId::kC6_2) {
        plan.base_labels = {"K_" + std::to_string(r)};
        add(h, 0, r);
        plan.bases = {complete_graph(r)};
      } else {
        const std::size_t base_order = multiply_checked(tt, r, cname) + r + 1;
        plan.base_labels = {std::to_string(tt) + "K_" + std::to_string(r) + " u K_" +
                            std::to_string(r + 1)};
        add(h, 0, base_order);
        std::vector<Graph> parts(tt, complete_graph(r));
        parts.push_back(complete_graph(r + 1));
        plan.bases = {disjoint_union(parts)};
        // Energy of a union is the sum of its parts' closed forms.
        plan.base_closed_form = {static_cast<double>(tt) * known_energy(CompleteFamily{r}) +
                                 known_energy(CompleteFamily{r + 1})};
      }
      plan.groups = {{0}};
      break;
    }
  }

  if (plan.base_closed_form.empty()) {
    for (const auto& b : plan.bases) plan.base_closed_form.push_back(closed_form_energy(b));
  }
  return plan;
}

Graph build_member(const FamilyPlan& plan, const MemberPlan& member) {
  const Graph& base = plan.bases.at(member.base_index);
  struct Visitor {
    const Graph& base;
    Graph operator()(const SplitParams& s) const { return generalized_splitting(base, s); }
    Graph operator()(const ShadowSplitParams& h) const { return shadow_splitting(base, h); }
    Graph operator()(const ShadowCopies& d) const { return m_shadow(base, d.m); }
    Graph operator()(const KroneckerWith& k) const {
      return k.factor_first ? kronecker_product(k.factor, base) : kronecker_product(base, k.factor);
    }
  };
  return std::visit(Visitor{base}, member.op);
}

std::vector<Graph> instantiate_family(const FamilySpec& spec) {
  const FamilyPlan plan = plan_family(spec);
  std::vector<Graph> out;
  out.reserve(plan.members.size());
  for (const auto& member : plan.members) out.push_back(build_member(plan, member));
  return out;
}

double predicted_factor(const MemberOperator& op) {
  struct Visitor {
    double operator()(const SplitParams& s) const { return split_energy_factor(s.p, s.q); }
    double operator()(const ShadowSplitParams& h) const {
      return shadow_split_energy_factor(h.c, h.k);
    }
    double operator()(const ShadowCopies& d) const {
      return known_energy(ShadowFamily{d.m, 1.0});
    }
    double operator()(const KroneckerWith& k) const {
      return known_energy(KroneckerFamily{base_energy(k.factor), 1.0});
    }
  };
  return std::visit(Visitor{}, op);
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kFormula: return "formula";
    case Method::kOracle: return "oracle";
    case Method::kBoth: return "both";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  if (text == "formula") return Method::kFormula;
  if (text == "oracle") return Method::kOracle;
  if (text == "both") return Method::kBoth;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

namespace {

VerificationReport run_verification(const FamilySpec& spec, const VerifyOptions& options) {
  const FamilyPlan plan = plan_family(spec);
  const bool border = is_borderenergetic(spec.corollary);
  const bool use_formula = options.method != Method::kOracle;
  const bool use_oracle = options.method != Method::kFormula;

  VerificationReport report;
  report.corollary = spec.corollary;
  report.borderenergetic = border;
  report.method = options.method;
  report.parameters = plan.parameters;
  report.base_labels = plan.base_labels;
  report.groups = plan.groups;

  std::size_t max_member_order = 0;
  for (const auto& m : plan.members) max_member_order = std::max(max_member_order, m.order);
  if (options.tolerance && !(*options.tolerance > 0.0)) {
    throw std::invalid_argument("tolerance override must be positive");
  }
  const double tol = options.tolerance.value_or(verification_tolerance(max_member_order));
  report.tolerance = tol;

  std::vector<std::optional<double>> base_formula_energy(plan.bases.size());
  auto formula_base_energy = [&](std::size_t idx) {
    if (!base_formula_energy[idx]) {
      base_formula_energy[idx] = plan.base_closed_form[idx].has_value()
                                     ? *plan.base_closed_form[idx]
                                     : energy(plan.bases[idx]).value;
    }
    return *base_formula_energy[idx];
  };

  std::vector<std::optional<Spectrum>> spectra(plan.members.size());
  bool identities = true;
  for (std::size_t i = 0; i < plan.members.size(); ++i) {
    const auto& member = plan.members[i];
    MemberResult r;
    r.description = member.description;
    r.order = member.order;
    r.edges = operator_edge_count(member.op, plan.bases[member.base_index].edge_count().value);
    if (use_formula) {
      r.predicted_energy = predicted_factor(member.op) * formula_base_energy(member.base_index);
    }
    if (use_oracle) {
      const Graph g = build_member(plan, member);
      r.edges = g.edge_count().value;
      Spectrum s = adjacency_spectrum(g);
      r.measured_energy = s.energy();
      r.trace = s.trace();
      r.sum_of_squares = s.sum_of_squares();
      const double n = static_cast<double>(g.order());
      if (std::abs(*r.trace) > n * 1e-10 ||
          std::abs(*r.sum_of_squares - 2.0 * static_cast<double>(r.edges)) > n * 1e-9) {
        identities = false;
      }
      spectra[i] = std::move(s);
    }
    if (border) r.target_energy = 2.0 * (static_cast<double>(member.order) - 1.0);
    report.members.push_back(std::move(r));
  }
  if (use_oracle) report.spectral_identities_hold = identities;

  auto reference_energy = [&](const MemberResult& r) {
    return r.measured_energy ? *r.measured_energy : *r.predicted_energy;
  };

  report.orders_equal = true;
  report.energies_equal = true;
  for (const auto& group : plan.groups) {
    const auto& head = report.members[group.front()];
    for (std::size_t idx : group) {
      const auto& r = report.members[idx];
      if (r.order != head.order) report.orders_equal = false;
      if (std::abs(reference_energy(r) - reference_energy(head)) > tol) {
        report.energies_equal = false;
      }
    }
    if (use_oracle) {
      for (std::size_t a = 0; a < group.size(); ++a) {
        for (std::size_t b = a + 1; b < group.size(); ++b) {
          const auto& sa = *spectra[group[a]];
          const auto& sb = *spectra[group[b]];
          report.cospectral.push_back({group[a], group[b], spectra_match(sa, sb, tol)});
        }
      }
    }
  }

  if (use_formula && use_oracle) {
    bool agree = true;
    for (const auto& r : report.members) {
      if (std::abs(*r.predicted_energy - *r.measured_energy) > tol) agree = false;
    }
    report.formula_matches_oracle = agree;
  }

  if (border) {
    bool ok = true;
    for (const auto& r : report.members) {
      for (const auto& e : {r.predicted_energy, r.measured_energy}) {
        if (e && std::abs(*e - *r.target_energy) > tol) ok = false;
      }
    }
    report.energy_equals_complete = ok;
  }

  report.pass = report.orders_equal && report.energies_equal &&
                report.formula_matches_oracle.value_or(true) &&
                report.energy_equals_complete.value_or(true) &&
                report.spectral_identities_hold.value_or(true);
  return report;
}

}  // namespace

VerificationReport verify_equienergetic(const FamilySpec& spec, const VerifyOptions& options) {
  if (is_borderenergetic(spec.corollary)) {
    throw DomainError(std::string(to_string(spec.corollary)) +
                      " is a borderenergetic family; use verify_borderenergetic");
  }
  return run_verification(spec, options);
}

VerificationReport verify_borderenergetic(const FamilySpec& spec, const VerifyOptions& options) {
  if (!is_borderenergetic(spec.corollary)) {
    throw DomainError(std::string(to_string(spec.corollary)) +
                      " is an equienergetic family; use verify_equienergetic");
  }
  return run_verification(spec, options);
}

VerificationReport verify_family(const FamilySpec& spec, const VerifyOptions& options) {
  return is_borderenergetic(spec.corollary) ? verify_borderenergetic(spec, options)
                                            : verify_equienergetic(spec, options);
}

}  // namespace splitgraph
