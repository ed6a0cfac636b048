// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "splitgraph/constructions.hpp"
#include "splitgraph/families.hpp"
#include "splitgraph/formulas.hpp"
#include "splitgraph/graph_io.hpp"
#include "splitgraph/spectral.hpp"

using namespace splitgraph;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) first_failure = what;
    pass = pass && ok;
  }
};

// Everything built in criteria 1-7, replayed by criterion 8.
struct Corpus {
  struct Entry {
    std::string label;
    Graph graph;
    std::optional<Spectrum> spectrum;
  };
  std::vector<Entry> graphs;
  struct MemberSums {
    std::string label;
    std::size_t order;
    std::size_t edges;
    double trace;
    double sum_of_squares;
  };
  std::vector<MemberSums> members;
  std::vector<FamilySpec> families;
};

Corpus corpus;

std::vector<std::pair<std::string, Graph>> base_set() {
  std::mt19937_64 rng(20240611);
  return {{"K_3", complete_graph(3)},     {"C_4", cycle_graph(4)}, {"C_5", cycle_graph(5)},
          {"K_{2,3}", complete_bipartite(2, 3)}, {"P_4", path_graph(4)},
          {"random8", random_graph(8, 0.5, rng)}};
}

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

Outcome operator_grid(bool shadow) {
  Outcome out;
  for (const auto& [label, g] : base_set()) {
    const double base = energy(g).value;
    for (std::size_t x = 1; x <= 4; ++x) {
      for (std::size_t y = 1; y <= 4; ++y) {
        const Graph h = shadow ? shadow_splitting(g, {x, y}) : generalized_splitting(g, {x, y});
        const double factor = shadow ? shadow_split_energy_factor(x, y) : split_energy_factor(x, y);
        const Spectrum s = adjacency_spectrum(h);
        const std::string name = std::string(shadow ? "H_{" : "S_{") + std::to_string(x) + "," +
                                 std::to_string(y) + "}(" + label + ")";
        out.check(std::abs(s.energy() - factor * base) <= verification_tolerance(h.order()),
                  name + fmt(": %.17g vs %.17g", s.energy(), factor * base));
        corpus.graphs.push_back({name, h, s});
      }
    }
  }
  return out;
}

Outcome ac3() {
  Outcome out;
  for (std::size_t x = 1; x <= 6; ++x) {
    for (std::size_t y = 1; y <= 6; ++y) {
      const std::string tag = std::to_string(x) + "," + std::to_string(y);
      const Spectrum split_direct = eigenvalues_symmetric(coefficient_matrix_split(x, y).to_dense());
      out.check(spectrum_distance(split_direct, split_coefficient_spectrum(x, y)) <= 1e-10, "split " + tag);
      out.check(split_direct.count_near(1.0, 1e-10) == x - 1, "split multiplicity of 1 at " + tag);
      out.check(split_direct.count_near(0.0, 1e-10) == y - 1, "split multiplicity of 0 at " + tag);
      const Spectrum shadow_direct = eigenvalues_symmetric(coefficient_matrix_shadow(x, y).to_dense());
      out.check(spectrum_distance(shadow_direct, shadow_coefficient_spectrum(x, y)) <= 1e-10, "shadow " + tag);
      out.check(shadow_direct.count_near(0.0, 1e-10) == x + y - 2, "shadow multiplicity of 0 at " + tag);
    }
  }
  return out;
}

void record(const VerificationReport& r, const FamilySpec& spec) {
  for (const auto& m : r.members) {
    if (m.trace && m.sum_of_squares) {
      corpus.members.push_back({std::string(to_string(r.corollary)) + " " + m.description, m.order, m.edges,
                                *m.trace, *m.sum_of_squares});
    }
  }
  corpus.families.push_back(spec);
}

FamilySpec spec_of(CorollaryId id, ParameterMap params, std::optional<Graph> base = std::nullopt) {
  FamilySpec s;
  s.corollary = id;
  s.parameters = std::move(params);
  s.base = std::move(base);
  return s;
}

Outcome ac4() {
  Outcome out;
  auto expect = [&](const FamilySpec& spec, const std::vector<std::pair<std::size_t, double>>& values) {
    const auto r = verify_family(spec);
    record(r, spec);
    std::string tag = std::string(to_string(spec.corollary));
    for (const auto& [name, v] : spec.parameters) tag += " " + name + "=" + std::to_string(v);
    out.check(r.pass, tag + " verdict");
    out.check(r.members.size() == values.size(), tag + " member count");
    for (std::size_t i = 0; i < r.members.size() && i < values.size(); ++i) {
      const auto& m = r.members[i];
      out.check(m.order == values[i].first, tag + " order " + std::to_string(m.order));
      out.check(m.predicted_energy && std::abs(*m.predicted_energy - values[i].second) <= 1e-8,
                tag + " formula energy");
      out.check(m.measured_energy && std::abs(*m.measured_energy - values[i].second) <= 1e-8,
                tag + " oracle energy");
    }
  };
  for (long long k = 1; k <= 3; ++k) {
    expect(spec_of(CorollaryId::kC6_1, {{"k", k}}),
           {{6 * k + 3, 12.0 * k + 4}, {30 * k + 21, 60.0 * k + 40}});
  }
  expect(spec_of(CorollaryId::kC6_2, {{"t", 1}}), {{49, 96.0}});
  expect(spec_of(CorollaryId::kC6_2, {{"t", 2}}), {{190, 378.0}});
  expect(spec_of(CorollaryId::kC6_3, {{"t", 1}}), {{105, 208.0}});
  return out;
}

Outcome ac5() {
  Outcome out;
  std::vector<FamilySpec> specs;
  for (const auto& base : {cycle_graph(4), complete_graph(3)}) {
    for (long long t = 1; t <= 2; ++t) {
      for (long long m = 1; m <= 2; ++m) {
        for (long long k : {1, -1}) specs.push_back(spec_of(CorollaryId::kC5_2, {{"t", t}, {"m", m}, {"k", k}}, base));
      }
    }
    for (long long m = 2; m <= 3; ++m) {
      for (long long t = 1; t < m; ++t) specs.push_back(spec_of(CorollaryId::kC5_3, {{"m", m}, {"t", t}}, base));
    }
    for (long long p = 1; p <= 3; ++p) specs.push_back(spec_of(CorollaryId::kC5_4, {{"p", p}, {"q", 4 * p - 2}}, base));
    for (long long c = 1; c <= 3; ++c) specs.push_back(spec_of(CorollaryId::kC5_5, {{"c", c}, {"k", 2 * c}}, base));
    specs.push_back(spec_of(CorollaryId::kC5_6, {}, base));
    for (long long m = 1; m <= 2; ++m) specs.push_back(spec_of(CorollaryId::kC5_7, {{"m", m}}, base));
    specs.push_back(spec_of(CorollaryId::kC5_8, {{"m", 1}}, base));
    specs.push_back(spec_of(CorollaryId::kC5_9, {{"t", 1}}, base));
  }
  for (const auto& spec : specs) {
    std::string tag = std::string(to_string(spec.corollary)) + " on order-" + std::to_string(spec.base->order());
    for (const auto& [name, v] : spec.parameters) tag += " " + name + "=" + std::to_string(v);
    try {
      const auto r = verify_family(spec);
      record(r, spec);
      out.check(r.orders_equal && r.energies_equal && r.pass, tag);
    } catch (const std::exception& e) {
      out.check(false, tag + ": " + e.what());
    }
  }
  return out;
}

Outcome ac6() {
  Outcome out;
  for (long long p = 1; p <= 3; ++p) {
    const auto spec = spec_of(CorollaryId::kC5_4, {{"p", p}, {"q", 4 * p - 1}});
    const auto r = verify_family(spec);
    record(r, spec);
    out.check(!r.energies_equal && !r.pass, "C5_4 p=" + std::to_string(p) + " q=4p-1 should fail");
    std::ostringstream sink;
    const int code = cli::run({"verify", "C5_4", "p=" + std::to_string(p), "q=" + std::to_string(4 * p - 1)},
                              sink, sink);
    out.check(code != 0, "C5_4 exit status");
  }
  for (long long c = 1; c <= 3; ++c) {
    const auto spec = spec_of(CorollaryId::kC5_5, {{"c", c}, {"k", 2 * c + 1}});
    const auto r = verify_family(spec);
    record(r, spec);
    out.check(!r.energies_equal && !r.pass, "C5_5 c=" + std::to_string(c) + " k=2c+1 should fail");
    std::ostringstream sink;
    const int code = cli::run({"verify", "C5_5", "c=" + std::to_string(c), "k=" + std::to_string(2 * c + 1)},
                              sink, sink);
    out.check(code != 0, "C5_5 exit status");
  }
  return out;
}

Outcome ac7() {
  Outcome out;
  const Graph c4 = cycle_graph(4);
  out.check(generalized_splitting(c4, {2, 2}) == construct_by_neighborhood(c4, SplitParams{2, 2}), "S_{2,2}(C_4)");
  out.check(shadow_splitting(c4, {2, 2}) == construct_by_neighborhood(c4, ShadowSplitParams{2, 2}), "H_{2,2}(C_4)");
  corpus.graphs.push_back({"S_{2,2}(C_4)", generalized_splitting(c4, {2, 2}), std::nullopt});
  corpus.graphs.push_back({"H_{2,2}(C_4)", shadow_splitting(c4, {2, 2}), std::nullopt});
  std::mt19937_64 rng(777);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(2 + rng() % 9, 0.2 + 0.6 * std::uniform_real_distribution<double>()(rng), rng);
    const std::size_t x = 1 + rng() % 5;
    const std::size_t y = 1 + rng() % 5;
    const bool shadow = i % 2 == 1;
    const Graph kron_route = shadow ? shadow_splitting(g, {x, y}) : generalized_splitting(g, {x, y});
    const Graph nbhd_route = shadow ? construct_by_neighborhood(g, ShadowSplitParams{x, y})
                                    : construct_by_neighborhood(g, SplitParams{x, y});
    out.check(kron_route == nbhd_route, "random instance " + std::to_string(i));
    corpus.graphs.push_back({"random instance " + std::to_string(i), kron_route, std::nullopt});
  }
  return out;
}

Outcome ac8() {
  Outcome out;
  auto sums_ok = [&](const std::string& label, std::size_t n, std::size_t edges, double trace, double sos) {
    out.check(std::abs(trace) <= std::max(1e-8, n * 1e-10), label + " trace");
    out.check(std::abs(sos - 2.0 * double(edges)) <= std::max(1e-8, n * 1e-9), label + " sum of squares");
  };
  for (auto& e : corpus.graphs) {
    if (!e.spectrum) e.spectrum = adjacency_spectrum(e.graph);
    sums_ok(e.label, e.graph.order(), e.graph.edge_count().value, e.spectrum->trace(), e.spectrum->sum_of_squares());
    out.check(decode_graph6(encode_graph6(e.graph)) == e.graph, e.label + " graph6");
  }
  for (const auto& m : corpus.members) sums_ok(m.label, m.order, m.edges, m.trace, m.sum_of_squares);
  for (const auto& spec : corpus.families) {
    for (const auto& g : instantiate_family(spec)) {
      out.check(decode_graph6(encode_graph6(g)) == g, std::string(to_string(spec.corollary)) + " member graph6");
    }
  }
  return out;
}

Outcome ac9() {
  Outcome out;
  for (std::size_t n = 1; n <= 10; ++n) {
    out.check(std::abs(energy(complete_graph(n)).value - 2.0 * double(n - 1)) <= 1e-8, "K_" + std::to_string(n));
  }
  for (std::size_t m = 1; m <= 6; ++m) {
    for (std::size_t n = 1; n <= 6; ++n) {
      out.check(std::abs(energy(complete_bipartite(m, n)).value - 2.0 * std::sqrt(double(m * n))) <= 1e-8,
                "K_{" + std::to_string(m) + "," + std::to_string(n) + "}");
    }
  }
  for (const auto& [label, g] : base_set()) {
    const double e = energy(g).value;
    for (std::size_t m = 1; m <= 4; ++m) {
      out.check(std::abs(energy(m_shadow(g, m)).value - double(m) * e) <= 1e-8,
                "D_" + std::to_string(m) + "(" + label + ")");
    }
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "splitting energy equals factor times base energy", [] { return operator_grid(false); }},
      {"AC2", "shadow-splitting energy equals factor times base energy", [] { return operator_grid(true); }},
      {"AC3", "coefficient spectra match direct eigensolves", ac3},
      {"AC4", "borderenergetic families reproduce orders and energies", ac4},
      {"AC5", "equienergetic families verify on C_4 and K_3", ac5},
      {"AC6", "off-manifold controls fail with nonzero exit", ac6},
      {"AC7", "neighborhood and Kronecker routes agree", ac7},
      {"AC8", "trace, sum of squares and graph6 round trip", ac8},
      {"AC9", "known-energy anchors", ac9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s  %s (%zu checks, %.2fs)%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, o.checks, secs,
                o.pass ? "" : ": ", o.first_failure.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
