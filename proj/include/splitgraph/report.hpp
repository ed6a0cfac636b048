#pragma once

#include <span>
#include <string>

#include "json.hpp"
#include "splitgraph/families.hpp"
#include "splitgraph/spectral.hpp"

namespace splitgraph {

using OrderedJson = nlohmann::ordered_json;

/// Serializes with a fixed float format (17 significant digits, always
/// carrying a decimal point or exponent) so identical inputs give identical
/// bytes. `indent` < 0 writes a single line.
std::string dump_json(const OrderedJson& value, int indent = 2);

/// %.17g with a trailing ".0" when the result would read as an integer.
std::string format_double(double value);

OrderedJson to_json(const VerificationReport& report);
OrderedJson to_json(std::span<const VerificationReport> reports);

/// Eigenvalues, merged multiplicities and the derived sums.
OrderedJson spectrum_to_json(const Spectrum& spectrum);

/// Human-readable rendering of a report; the JSON form is the record.
std::string render_table(const VerificationReport& report);

}  // namespace splitgraph
