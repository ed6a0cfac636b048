#include "splitgraph/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace splitgraph {
namespace {

void dump(const OrderedJson& value, int indent, int depth, std::string& out) {
  const bool pretty = indent >= 0;
  auto newline = [&](int level) {
    if (!pretty) return;
    out.push_back('\n');
    out.append(static_cast<std::size_t>(level * indent), ' ');
  };
  switch (value.type()) {
    case OrderedJson::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out.push_back('{');
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out.push_back(',');
        first = false;
        newline(depth + 1);
        out += OrderedJson(it.key()).dump();
        out += pretty ? ": " : ":";
        dump(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out.push_back('}');
      return;
    }
    case OrderedJson::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out.push_back('[');
      bool first = true;
      for (const auto& item : value) {
        if (!first) out.push_back(',');
        first = false;
        newline(depth + 1);
        dump(item, indent, depth + 1, out);
      }
      newline(depth);
      out.push_back(']');
      return;
    }
    case OrderedJson::value_t::number_float:
      out += format_double(value.get<double>());
      return;
    default:
      out += value.dump();
      return;
  }
}

OrderedJson optional_number(const std::optional<double>& v) {
  return v ? OrderedJson(*v) : OrderedJson(nullptr);
}

OrderedJson optional_bool(const std::optional<bool>& v) {
  return v ? OrderedJson(*v) : OrderedJson(nullptr);
}

}  // namespace

std::string format_double(double value) {
  if (!std::isfinite(value)) return "null";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  std::string text(buffer);
  if (text.find_first_of(".eE") == std::string::npos) text += ".0";
  return text;
}

std::string dump_json(const OrderedJson& value, int indent) {
  std::string out;
  dump(value, indent, 0, out);
  return out;
}

OrderedJson to_json(const VerificationReport& report) {
  OrderedJson j;
  j["corollary"] = std::string(to_string(report.corollary));
  j["kind"] = report.borderenergetic ? "borderenergetic" : "equienergetic";
  j["method"] = std::string(to_string(report.method));
  OrderedJson params = OrderedJson::object();
  for (const auto& [name, value] : report.parameters) params[name] = value;
  j["parameters"] = params;
  j["bases"] = report.base_labels;
  j["tolerance"] = report.tolerance;

  OrderedJson members = OrderedJson::array();
  for (const auto& m : report.members) {
    OrderedJson row;
    row["description"] = m.description;
    row["order"] = m.order;
    row["edges"] = m.edges;
    row["predicted_energy"] = optional_number(m.predicted_energy);
    row["measured_energy"] = optional_number(m.measured_energy);
    if (report.borderenergetic) row["target_energy"] = optional_number(m.target_energy);
    row["trace"] = optional_number(m.trace);
    row["sum_of_squares"] = optional_number(m.sum_of_squares);
    members.push_back(std::move(row));
  }
  j["members"] = members;
  j["groups"] = report.groups;
  j["orders_equal"] = report.orders_equal;
  j["energies_equal"] = report.energies_equal;
  j["formula_matches_oracle"] = optional_bool(report.formula_matches_oracle);
  if (report.borderenergetic) {
    j["energy_equals_complete"] = optional_bool(report.energy_equals_complete);
  }
  j["spectral_identities_hold"] = optional_bool(report.spectral_identities_hold);
  OrderedJson flags = OrderedJson::array();
  for (const auto& f : report.cospectral) {
    OrderedJson row;
    row["members"] = {f.first, f.second};
    row["cospectral"] = f.cospectral;
    flags.push_back(std::move(row));
  }
  j["cospectral"] = flags;
  j["verdict"] = report.pass ? "pass" : "fail";
  if (report.error) j["error"] = *report.error;
  return j;
}

OrderedJson to_json(std::span<const VerificationReport> reports) {
  OrderedJson out = OrderedJson::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

OrderedJson spectrum_to_json(const Spectrum& spectrum) {
  OrderedJson j;
  j["order"] = spectrum.size();
  j["eigenvalues"] = std::vector<double>(spectrum.values().begin(), spectrum.values().end());
  OrderedJson groups = OrderedJson::array();
  for (const auto& [value, count] : spectrum.multiplicities()) {
    OrderedJson row;
    row["value"] = value;
    row["multiplicity"] = count;
    groups.push_back(std::move(row));
  }
  j["multiplicities"] = groups;
  j["merge_tolerance"] = spectrum.merge_tolerance();
  j["trace"] = spectrum.trace();
  j["sum_of_squares"] = spectrum.sum_of_squares();
  j["energy"] = spectrum.energy();
  return j;
}

std::string render_table(const VerificationReport& report) {
  std::ostringstream out;
  out << to_string(report.corollary) << " (" << (report.borderenergetic ? "borderenergetic" : "equienergetic")
      << ", method " << to_string(report.method) << ")";
  for (const auto& [name, value] : report.parameters) out << ' ' << name << '=' << value;
  out << '\n';
  if (report.error) {
    out << "  error: " << *report.error << "\n  verdict: fail\n";
    return out.str();
  }
  auto cell = [](const std::optional<double>& v) {
    if (!v) return std::string("-");
    std::ostringstream s;
    s << std::setprecision(12) << *v;
    return s.str();
  };
  out << "  " << std::left << std::setw(32) << "member" << std::right << std::setw(8) << "order"
      << std::setw(20) << "predicted" << std::setw(20) << "measured";
  if (report.borderenergetic) out << std::setw(12) << "2(N-1)";
  out << '\n';
  for (const auto& m : report.members) {
    out << "  " << std::left << std::setw(32) << m.description << std::right << std::setw(8)
        << m.order << std::setw(20) << cell(m.predicted_energy) << std::setw(20)
        << cell(m.measured_energy);
    if (report.borderenergetic) out << std::setw(12) << cell(m.target_energy);
    out << '\n';
  }
  out << "  tolerance " << report.tolerance << ", orders_equal " << std::boolalpha
      << report.orders_equal << ", energies_equal " << report.energies_equal;
  if (report.formula_matches_oracle) out << ", formula_matches_oracle " << *report.formula_matches_oracle;
  if (report.energy_equals_complete) out << ", energy_equals_complete " << *report.energy_equals_complete;
  out << "\n  verdict: " << (report.pass ? "pass" : "fail") << '\n';
  return out.str();
}

}  // namespace splitgraph
