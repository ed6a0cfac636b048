#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "splitgraph/graph.hpp"

namespace splitgraph {

/// Largest order representable with the 4-byte graph6 size header.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GraphFormat { kGraph6, kMatrixMarket, kEdgeList };

std::string_view to_string(GraphFormat format);
GraphFormat parse_graph_format(std::string_view name);

/// Guesses a format from a file extension (.g6, .mtx, .edges/.txt).
std::optional<GraphFormat> format_from_extension(const std::filesystem::path& path);

// graph6: size header, then the upper triangle read column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed big-endian six bits per
// byte, each byte offset by 63. No trailing newline.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

// Matrix Market coordinate/pattern/symmetric, lower triangle, 1-based.
std::string write_matrix_market(const Graph& g);
Graph read_matrix_market(std::string_view text);

// Edge list: "# order N" directive, then one "u v" line per edge with u < v,
// 0-based. Other '#' lines are comments.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::string_view text);

std::string write_graph(const Graph& g, GraphFormat format);
Graph read_graph(std::string_view text, GraphFormat format);

void write_graph_file(const Graph& g, const std::filesystem::path& path, GraphFormat format);

/// Reads a graph file. When `format` is empty it is taken from the extension.
Graph read_graph_file(const std::filesystem::path& path,
                      std::optional<GraphFormat> format = std::nullopt);

}  // namespace splitgraph
