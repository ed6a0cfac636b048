#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "splitgraph/families.hpp"
#include "splitgraph/graph.hpp"

namespace splitgraph::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

/// Runs the command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Builds a generator graph from "complete:7", "cycle:4", "path:4",
/// "bipartite:2:3", "empty:5" or the labels K_7, C_4, P_4, K_{2,3}.
Graph parse_generator(const std::string& text);

/// "split:p:q", "shadow-split:c:k", "shadow:m" or "msplit:m".
MemberOperator parse_operator(const std::string& text);

}  // namespace splitgraph::cli
