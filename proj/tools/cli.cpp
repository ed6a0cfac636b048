#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "splitgraph/constructions.hpp"
#include "splitgraph/formulas.hpp"
#include "splitgraph/graph_io.hpp"
#include "splitgraph/report.hpp"
#include "splitgraph/spectral.hpp"
#include "splitgraph/sweep.hpp"

namespace splitgraph::cli {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw UsageError(what + ": expected an integer, got '" + text + "'");
  }
  if (pos != text.size() || value < 0) {
    throw UsageError(what + ": expected a nonnegative integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(value);
}

long long parse_integer(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw UsageError(what + ": expected an integer, got '" + text + "'");
  }
  if (pos != text.size()) throw UsageError(what + ": expected an integer, got '" + text + "'");
  return value;
}

Graph generator_from_words(const std::vector<std::string>& words) {
  if (words.empty()) throw UsageError("missing generator family");
  const std::string& family = words[0];
  auto arg = [&](std::size_t i) {
    if (i >= words.size()) throw UsageError("generator '" + family + "' needs more parameters");
    return parse_size(words[i], family);
  };
  auto expect = [&](std::size_t count) {
    if (words.size() != count + 1) {
      throw UsageError("generator '" + family + "' takes " + std::to_string(count) +
                       " parameter(s)");
    }
  };
  if (family == "complete") {
    expect(1);
    return complete_graph(arg(1));
  }
  if (family == "bipartite" || family == "complete-bipartite") {
    expect(2);
    return complete_bipartite(arg(1), arg(2));
  }
  if (family == "cycle") {
    expect(1);
    return cycle_graph(arg(1));
  }
  if (family == "path") {
    expect(1);
    return path_graph(arg(1));
  }
  if (family == "empty") {
    expect(1);
    return Graph::empty(arg(1));
  }
  throw UsageError("unknown generator family '" + family + "'");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << text;
}

std::optional<GraphFormat> optional_format(const std::string& name) {
  if (name.empty()) return std::nullopt;
  return parse_graph_format(name);
}

GraphFormat output_format(const std::string& name, const std::string& path) {
  if (!name.empty()) return parse_graph_format(name);
  if (!path.empty() && path != "-") {
    if (auto f = format_from_extension(path)) return *f;
  }
  return GraphFormat::kGraph6;
}

Graph load_graph(const std::string& path, const std::string& format_name) {
  return read_graph_file(path, optional_format(format_name));
}

/// A base given on the command line: an existing file or a generator spec.
Graph resolve_base(const std::string& text, const std::string& format_name) {
  if (std::filesystem::exists(text)) return load_graph(text, format_name);
  return parse_generator(text);
}

std::string describe_operator(const MemberOperator& op) {
  struct Visitor {
    std::string operator()(const SplitParams& s) const {
      return "S_{" + std::to_string(s.p) + "," + std::to_string(s.q) + "}";
    }
    std::string operator()(const ShadowSplitParams& h) const {
      return "H_{" + std::to_string(h.c) + "," + std::to_string(h.k) + "}";
    }
    std::string operator()(const ShadowCopies& d) const { return "D_{" + std::to_string(d.m) + "}"; }
    std::string operator()(const KroneckerWith& k) const { return "(x) " + k.label; }
  };
  return std::visit(Visitor{}, op);
}

Graph apply_operator(const MemberOperator& op, const Graph& base) {
  struct Visitor {
    const Graph& base;
    Graph operator()(const SplitParams& s) const { return generalized_splitting(base, s); }
    Graph operator()(const ShadowSplitParams& h) const { return shadow_splitting(base, h); }
    Graph operator()(const ShadowCopies& d) const { return m_shadow(base, d.m); }
    Graph operator()(const KroneckerWith& k) const { return kronecker_product(base, k.factor); }
  };
  return std::visit(Visitor{base}, op);
}

/// Closed-form spectrum of the operator's coefficient matrix.
Spectrum coefficient_spectrum(const MemberOperator& op) {
  struct Visitor {
    Spectrum operator()(const SplitParams& s) const { return split_coefficient_spectrum(s.p, s.q); }
    Spectrum operator()(const ShadowSplitParams& h) const {
      return shadow_coefficient_spectrum(h.c, h.k);
    }
    Spectrum operator()(const ShadowCopies& d) const {
      std::vector<double> values(d.m, 0.0);
      values[0] = static_cast<double>(d.m);
      return Spectrum(std::move(values));
    }
    Spectrum operator()(const KroneckerWith& k) const { return adjacency_spectrum(k.factor); }
  };
  return std::visit(Visitor{}, op);
}

std::string theorem_name(const MemberOperator& op) {
  struct Visitor {
    std::string operator()(const SplitParams&) const { return to_string(TheoremSource::kSplitting); }
    std::string operator()(const ShadowSplitParams&) const {
      return to_string(TheoremSource::kShadowSplitting);
    }
    std::string operator()(const ShadowCopies&) const { return to_string(TheoremSource::kShadow); }
    std::string operator()(const KroneckerWith&) const { return to_string(TheoremSource::kKronecker); }
  };
  return std::visit(Visitor{}, op);
}

struct Bindings {
  ParameterMap parameters;
  std::optional<std::string> base;
  std::optional<std::string> base2;
};

Bindings parse_bindings(const std::vector<std::string>& words) {
  Bindings b;
  for (const auto& word : words) {
    const auto eq = word.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("expected name=value, got '" + word + "'");
    }
    const std::string name = word.substr(0, eq);
    const std::string value = word.substr(eq + 1);
    if (name == "base") {
      b.base = value;
    } else if (name == "base2") {
      b.base2 = value;
    } else {
      if (b.parameters.contains(name)) throw UsageError("parameter '" + name + "' given twice");
      b.parameters[name] = parse_integer(value, name);
    }
  }
  return b;
}

FamilySpec family_spec(CorollaryId id, const std::optional<std::string>& base,
                       const std::optional<std::string>& base2, const std::string& format) {
  FamilySpec spec;
  spec.corollary = id;
  if ((base || base2) && !takes_base_graph(id)) {
    throw UsageError(std::string(to_string(id)) + " fixes its own base graph");
  }
  if (base2 && id != CorollaryId::kC5_1) throw UsageError("base2 only applies to C5_1");
  if (base) spec.base = resolve_base(*base, format);
  if (base2) spec.second_base = resolve_base(*base2, format);
  return spec;
}

VerifyOptions verify_options(const std::string& method, const std::optional<double>& tol) {
  VerifyOptions options;
  options.method = parse_method(method);
  if (tol) {
    if (!(*tol > 0.0)) throw UsageError("--tol must be positive");
    options.tolerance = tol;
  }
  return options;
}

}  // namespace

Graph parse_generator(const std::string& text) {
  static const std::regex bipartite_label(R"(K_\{?(\d+),(\d+)\}?)");
  static const std::regex single_label(R"(([KCP])_\{?(\d+)\}?)");
  std::smatch m;
  if (std::regex_match(text, m, bipartite_label)) {
    return complete_bipartite(parse_size(m[1], "K_{m,n}"), parse_size(m[2], "K_{m,n}"));
  }
  if (std::regex_match(text, m, single_label)) {
    const std::size_t n = parse_size(m[2], text);
    if (m[1] == "K") return complete_graph(n);
    if (m[1] == "C") return cycle_graph(n);
    return path_graph(n);
  }
  return generator_from_words(split(text, ':'));
}

MemberOperator parse_operator(const std::string& text) {
  std::vector<std::string> words = split(text, ':');
  if (words.size() == 1) {
    std::istringstream in(text);
    words.clear();
    for (std::string w; in >> w;) words.push_back(w);
  }
  if (words.empty()) throw UsageError("empty operator");
  const std::string& name = words[0];
  auto arg = [&](std::size_t i) { return parse_size(words.at(i), name); };
  auto expect = [&](std::size_t count) {
    if (words.size() != count + 1) {
      throw UsageError("operator '" + name + "' takes " + std::to_string(count) +
                       " parameter(s)");
    }
  };
  if (name == "split") {
    expect(2);
    const SplitParams s{arg(1), arg(2)};
    validate(s);
    return s;
  }
  if (name == "shadow-split") {
    expect(2);
    const ShadowSplitParams h{arg(1), arg(2)};
    validate(h);
    return h;
  }
  if (name == "shadow") {
    expect(1);
    const auto m = arg(1);
    if (m < 1) throw UsageError("shadow needs m >= 1");
    return ShadowCopies{m};
  }
  if (name == "msplit") {
    expect(1);
    const auto m = arg(1);
    if (m < 1) throw UsageError("msplit needs m >= 1");
    return SplitParams{1, m};
  }
  throw UsageError("unknown operator '" + name + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized splitting and shadow-splitting graphs: construction, spectra, "
               "energies and family verification"};
  app.require_subcommand(1);
  std::string solver_name = std::string(to_string(default_eigen_solver()));
  app.add_option("--solver", solver_name, "Dense eigensolver: qr or jacobi")
      ->check(CLI::IsMember({"qr", "jacobi"}));

  // gen
  auto* gen = app.add_subcommand("gen", "Write a standard graph");
  std::vector<std::string> gen_words;
  std::string gen_format;
  std::string gen_output;
  gen->add_option("family", gen_words,
                  "complete N | bipartite M N | cycle N | path N | empty N | union PART...")
      ->required();
  gen->add_option("--format", gen_format, "graph6, mtx or edges");
  gen->add_option("-o,--output", gen_output, "Output path (stdout when omitted)");

  // construct
  auto* construct = app.add_subcommand("construct", "Apply a graph operator to an input graph");
  std::vector<std::string> construct_words;
  std::string construct_input;
  std::string construct_with;
  std::string construct_route = "kron";
  std::string construct_format;
  std::string construct_input_format;
  std::string construct_output;
  construct
      ->add_option("operator", construct_words,
                   "split P Q | shadow-split C K | shadow M | msplit M | kron")
      ->required();
  construct->add_option("-i,--input", construct_input, "Base graph file")->required();
  construct->add_option("--with", construct_with, "Second factor for kron (file or generator)");
  construct->add_option("--route", construct_route, "kron or neighborhood")
      ->check(CLI::IsMember({"kron", "neighborhood"}));
  construct->add_option("--format", construct_format, "Output format");
  construct->add_option("--input-format", construct_input_format, "Input format");
  construct->add_option("-o,--output", construct_output, "Output path");

  // spectrum / energy
  struct AnalysisArgs {
    std::string input;
    std::string op;
    std::string method;
    std::string input_format;
    std::string output;
    std::optional<double> tol;
  };
  AnalysisArgs spec_args;
  spec_args.method = "oracle";
  AnalysisArgs energy_args;
  energy_args.method = "both";
  auto add_analysis = [&](CLI::App* sub, AnalysisArgs& a) {
    sub->add_option("input", a.input, "Graph file")->required();
    sub->add_option("--op", a.op,
                    "Treat the input as a base graph and apply split:P:Q, shadow-split:C:K, "
                    "shadow:M or msplit:M");
    sub->add_option("--method", a.method, "formula, oracle or both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    sub->add_option("--input-format", a.input_format, "Input format");
    sub->add_option("--tol", a.tol, "Agreement tolerance override");
    sub->add_option("-o,--output", a.output, "Output path");
  };
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Adjacency spectrum as JSON");
  add_analysis(spectrum_cmd, spec_args);
  auto* energy_cmd = app.add_subcommand("energy", "Graph energy as JSON");
  add_analysis(energy_cmd, energy_args);

  // verify / sweep
  struct FamilyArgs {
    std::string corollary;
    std::vector<std::string> words;
    std::optional<std::string> base;
    std::optional<std::string> base2;
    std::string input_format;
    std::string method = "both";
    std::optional<double> tol;
    std::string output;
    std::size_t jobs = 0;
    bool table = false;
  };
  FamilyArgs verify_args;
  FamilyArgs sweep_args;
  auto add_family = [&](CLI::App* sub, FamilyArgs& a, const char* words_help) {
    sub->add_option("corollary", a.corollary, "C5_1 ... C5_9, C6_1 ... C6_3")->required();
    sub->add_option("bindings", a.words, words_help);
    sub->add_option("--base", a.base, "Base graph G (file or generator such as cycle:4)");
    sub->add_option("--base2", a.base2, "Second base graph for C5_1");
    sub->add_option("--input-format", a.input_format, "Format of base graph files");
    sub->add_option("--method", a.method, "formula, oracle or both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    sub->add_option("--tol", a.tol, "Tolerance override");
    sub->add_option("-o,--output", a.output, "Output path");
  };
  auto* verify_cmd = app.add_subcommand("verify", "Verify one instance of a family");
  add_family(verify_cmd, verify_args, "Parameter bindings such as t=1");
  verify_cmd->add_flag("--table", verify_args.table, "Print a table instead of JSON");
  auto* sweep_cmd = app.add_subcommand("sweep", "Verify a family over a parameter grid");
  add_family(sweep_cmd, sweep_args, "Ranges such as k=1..5 or t=1..m-1");
  sweep_cmd->add_option("--jobs", sweep_args.jobs, "Worker threads (default: hardware threads)");

  // convert
  auto* convert = app.add_subcommand("convert", "Convert between graph formats");
  std::string convert_input;
  std::string convert_input_format;
  std::string convert_format;
  std::string convert_output;
  convert->add_option("input", convert_input, "Graph file")->required();
  convert->add_option("--input-format", convert_input_format, "Input format");
  convert->add_option("--format", convert_format, "Output format");
  convert->add_option("-o,--output", convert_output, "Output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const EigenSolver previous_solver = default_eigen_solver();
  struct RestoreSolver {
    EigenSolver solver;
    ~RestoreSolver() { set_default_eigen_solver(solver); }
  } restore{previous_solver};
  set_default_eigen_solver(parse_eigen_solver(solver_name));

  try {
    if (*gen) {
      Graph g = Graph::empty(1);
      if (gen_words.front() == "union") {
        if (gen_words.size() < 2) throw UsageError("union needs at least one part");
        std::vector<Graph> parts;
        for (std::size_t i = 1; i < gen_words.size(); ++i) parts.push_back(parse_generator(gen_words[i]));
        g = disjoint_union(parts);
      } else if (gen_words.size() == 1) {
        g = parse_generator(gen_words.front());
      } else {
        g = generator_from_words(gen_words);
      }
      emit(write_graph(g, output_format(gen_format, gen_output)), gen_output, out);
      return kExitOk;
    }

    if (*construct) {
      const Graph base = load_graph(construct_input, construct_input_format);
      std::string joined;
      for (const auto& w : construct_words) joined += (joined.empty() ? "" : " ") + w;
      Graph result = base;
      if (construct_words.front() == "kron") {
        if (construct_words.size() != 1) throw UsageError("kron takes no parameters");
        if (construct_with.empty()) throw UsageError("kron needs --with");
        if (construct_route != "kron") throw UsageError("kron has only the kron route");
        result = kronecker_product(base, resolve_base(construct_with, construct_input_format));
      } else {
        const MemberOperator op = parse_operator(joined);
        if (construct_route == "neighborhood") {
          if (const auto* s = std::get_if<SplitParams>(&op)) {
            result = construct_by_neighborhood(base, *s);
          } else if (const auto* h = std::get_if<ShadowSplitParams>(&op)) {
            result = construct_by_neighborhood(base, *h);
          } else {
            result = m_shadow_by_definition(base, std::get<ShadowCopies>(op).m);
          }
        } else {
          result = apply_operator(op, base);
        }
      }
      emit(write_graph(result, output_format(construct_format, construct_output)),
           construct_output, out);
      return kExitOk;
    }

    if (*spectrum_cmd || *energy_cmd) {
      const bool is_energy = static_cast<bool>(*energy_cmd);
      const AnalysisArgs& a = is_energy ? energy_args : spec_args;
      const Method method = parse_method(a.method);
      if (a.tol && !(*a.tol > 0.0)) throw UsageError("--tol must be positive");
      const Graph input = load_graph(a.input, a.input_format);
      std::optional<MemberOperator> op;
      if (!a.op.empty()) op = parse_operator(a.op);
      const Graph graph = op ? apply_operator(*op, input) : input;
      const double tol = a.tol.value_or(verification_tolerance(graph.order()));
      const bool want_formula = method != Method::kOracle;
      const bool want_oracle = method != Method::kFormula;

      OrderedJson j;
      j["input"] = a.input;
      j["operator"] = op ? OrderedJson(describe_operator(*op)) : OrderedJson(nullptr);
      j["order"] = graph.order();
      j["edges"] = graph.edge_count().value;
      j["method"] = a.method;
      j["eigensolver"] = solver_name;
      j["tolerance"] = tol;
      bool ok = true;

      if (is_energy) {
        std::optional<double> formula;
        OrderedJson source = nullptr;
        if (want_formula) {
          if (op) {
            const auto closed = closed_form_energy(input);
            const double base = closed ? *closed : energy(input).value;
            formula = predicted_factor(*op) * base;
            source = theorem_name(*op) + (closed ? " x closed-form base" : " x eigensolved base");
          } else if (auto closed = closed_form_energy(graph)) {
            formula = *closed;
            source = "closed-form";
          } else if (method == Method::kFormula) {
            throw UsageError("no closed form for this graph; pass --op or use --method oracle");
          }
        }
        std::optional<double> oracle;
        if (want_oracle) oracle = energy(graph).value;
        j["formula_energy"] = formula ? OrderedJson(*formula) : OrderedJson(nullptr);
        j["formula_source"] = source;
        j["oracle_energy"] = oracle ? OrderedJson(*oracle) : OrderedJson(nullptr);
        if (formula && oracle) {
          const double delta = std::abs(*formula - *oracle);
          ok = delta <= tol;
          j["delta"] = delta;
          j["agree"] = ok;
        } else {
          j["delta"] = nullptr;
          j["agree"] = nullptr;
        }
      } else {
        std::optional<Spectrum> structured;
        if (want_formula) {
          if (!op) throw UsageError("the formula spectrum needs --op");
          structured = structured_spectrum(coefficient_spectrum(*op), adjacency_spectrum(input));
        }
        std::optional<Spectrum> direct;
        if (want_oracle) direct = adjacency_spectrum(graph);
        j["structured"] = structured ? spectrum_to_json(*structured) : OrderedJson(nullptr);
        j["oracle"] = direct ? spectrum_to_json(*direct) : OrderedJson(nullptr);
        if (structured && direct) {
          const double dev = spectrum_distance(*structured, *direct);
          ok = dev <= tol;
          j["max_deviation"] = dev;
          j["agree"] = ok;
        }
      }
      emit(dump_json(j) + "\n", a.output, out);
      return ok ? kExitOk : kExitVerificationFailed;
    }

    if (*verify_cmd) {
      const CorollaryId id = parse_corollary(verify_args.corollary);
      Bindings b = parse_bindings(verify_args.words);
      if (b.base && verify_args.base) throw UsageError("base given twice");
      if (b.base2 && verify_args.base2) throw UsageError("base2 given twice");
      FamilySpec spec = family_spec(id, b.base ? b.base : verify_args.base,
                                    b.base2 ? b.base2 : verify_args.base2,
                                    verify_args.input_format);
      spec.parameters = b.parameters;
      const VerificationReport report =
          verify_family(spec, verify_options(verify_args.method, verify_args.tol));
      const std::string json = dump_json(to_json(report)) + "\n";
      if (verify_args.table) {
        out << render_table(report);
        if (!verify_args.output.empty()) emit(json, verify_args.output, out);
      } else {
        emit(json, verify_args.output, out);
      }
      return report.pass ? kExitOk : kExitVerificationFailed;
    }

    if (*sweep_cmd) {
      const CorollaryId id = parse_corollary(sweep_args.corollary);
      std::vector<ParameterRange> ranges;
      std::optional<std::string> base = sweep_args.base;
      std::optional<std::string> base2 = sweep_args.base2;
      for (const auto& w : sweep_args.words) {
        if (w.rfind("base=", 0) == 0) {
          base = w.substr(5);
        } else if (w.rfind("base2=", 0) == 0) {
          base2 = w.substr(6);
        } else {
          ranges.push_back(parse_range(w));
        }
      }
      FamilySpec templ = family_spec(id, base, base2, sweep_args.input_format);
      std::size_t jobs = sweep_args.jobs;
      if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
      const auto reports =
          sweep(templ, ranges, verify_options(sweep_args.method, sweep_args.tol), jobs);
      emit(dump_json(to_json(reports)) + "\n", sweep_args.output, out);
      const bool all_pass =
          std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
      return all_pass ? kExitOk : kExitVerificationFailed;
    }

    if (*convert) {
      const Graph g = load_graph(convert_input, convert_input_format);
      emit(write_graph(g, output_format(convert_format, convert_output)), convert_output, out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace splitgraph::cli
