#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "splitgraph/families.hpp"

namespace splitgraph {

class SweepError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer arithmetic over parameter names: + - * / and parentheses.
/// Division truncates and must be exact.
long long evaluate_expression(std::string_view expr, const ParameterMap& bindings);

/// One axis of a sweep grid. Bounds are expressions that may refer to
/// parameters bound by earlier axes, e.g. "t=1..m-1" or "q=4*p-2".
struct ParameterRange {
  std::string name;
  std::string low;
  std::string high;
};

/// Parses "name=lo..hi" or "name=expr".
ParameterRange parse_range(std::string_view text);

/// Expands nested ranges (first axis outermost) into grid points. Axes whose
/// bounds cross for some outer point contribute nothing there. Throws
/// SweepError when the whole grid is empty.
std::vector<ParameterMap> expand_grid(const std::vector<ParameterRange>& ranges);

/// Verifies every grid point of `templ`'s corollary. Failures, including
/// out-of-domain points and cap violations, become failing reports with
/// `error` set. Reports come back in grid order regardless of `jobs`.
std::vector<VerificationReport> sweep(const FamilySpec& templ,
                                      const std::vector<ParameterRange>& ranges,
                                      const VerifyOptions& options, std::size_t jobs = 1);

}  // namespace splitgraph
