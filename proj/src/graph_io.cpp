#include "splitgraph/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace splitgraph {
namespace {

constexpr int kGraph6Offset = 63;
constexpr char kGraph6LongHeader = 126;

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_index(std::string_view token, std::string_view context) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw FormatError(std::string(context) + ": expected a nonnegative integer, got '" +
                      std::string(token) + "'");
  }
  return value;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i]))) {
      return false;
    }
  }
  return true;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view to_string(GraphFormat format) {
  switch (format) {
    case GraphFormat::kGraph6: return "graph6";
    case GraphFormat::kMatrixMarket: return "mtx";
    case GraphFormat::kEdgeList: return "edges";
  }
  return "unknown";
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::kGraph6;
  if (name == "mtx" || name == "matrix-market") return GraphFormat::kMatrixMarket;
  if (name == "edges" || name == "edgelist") return GraphFormat::kEdgeList;
  throw FormatError("unknown graph format '" + std::string(name) + "'");
}

std::optional<GraphFormat> format_from_extension(const std::filesystem::path& path) {
  const std::string ext = lower(path.extension().string());
  if (ext == ".g6" || ext == ".graph6") return GraphFormat::kGraph6;
  if (ext == ".mtx") return GraphFormat::kMatrixMarket;
  if (ext == ".edges" || ext == ".txt" || ext == ".el") return GraphFormat::kEdgeList;
  return std::nullopt;
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw FormatError("graph6 cannot encode order " + std::to_string(n));
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else {
    out.push_back(kGraph6LongHeader);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kGraph6Offset));
    }
  }
  int bits = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      bits = (bits << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(bits + kGraph6Offset));
        bits = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((bits << (6 - filled)) + kGraph6Offset));
  }
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw FormatError("graph6: empty input");
  for (char c : text) {
    if (c < kGraph6Offset || c > 126) {
      throw FormatError("graph6: byte " + std::to_string(static_cast<int>(c)) +
                        " outside the printable range 63..126");
    }
  }
  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != kGraph6LongHeader) {
    n = static_cast<std::size_t>(text[0] - kGraph6Offset);
    pos = 1;
  } else {
    if (text.size() < 4) throw FormatError("graph6: truncated size header");
    if (text[1] == kGraph6LongHeader) {
      throw FormatError("graph6: 8-byte size headers are not supported");
    }
    for (std::size_t k = 1; k <= 3; ++k) {
      n = (n << 6) | static_cast<std::size_t>(text[k] - kGraph6Offset);
    }
    if (n <= 62) throw FormatError("graph6: non-canonical long size header");
    pos = 4;
  }
  if (n == 0) throw FormatError("graph6: order 0 graphs are not representable");
  check_order(n, "graph6 input");
  const std::size_t pairs = n * (n - 1) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (text.size() - pos != body) {
    throw FormatError("graph6: expected " + std::to_string(body) + " data bytes for order " +
                      std::to_string(n) + ", got " + std::to_string(text.size() - pos));
  }
  std::vector<std::uint8_t> adj(n * n, 0);
  std::size_t bit_index = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit_index) {
      const int byte = text[pos + bit_index / 6] - kGraph6Offset;
      if ((byte >> (5 - bit_index % 6)) & 1) {
        adj[i * n + j] = 1;
        adj[j * n + i] = 1;
      }
    }
  }
  if (bit_index % 6 != 0) {
    const int last = text.back() - kGraph6Offset;
    const int pad_mask = (1 << (6 - bit_index % 6)) - 1;
    if ((last & pad_mask) != 0) throw FormatError("graph6: nonzero padding bits");
  }
  return Graph::from_adjacency(n, std::move(adj));
}

std::string write_matrix_market(const Graph& g) {
  const auto edges = g.edges();
  std::ostringstream out;
  out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
  out << g.order() << ' ' << g.order() << ' ' << edges.size() << '\n';
  // Lower triangle (row > col), column by column.
  for (auto [col, row] : edges) out << row + 1 << ' ' << col + 1 << '\n';
  return out.str();
}

Graph read_matrix_market(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || !starts_with_ci(lines[0], "%%MatrixMarket")) {
    throw FormatError("mtx: missing %%MatrixMarket banner");
  }
  const auto banner = tokens(lines[0]);
  if (banner.size() != 5 || lower(banner[1]) != "matrix" || lower(banner[2]) != "coordinate") {
    throw FormatError("mtx: only 'matrix coordinate' files are supported");
  }
  if (lower(banner[3]) != "pattern") {
    throw FormatError("mtx: only the 'pattern' field is supported");
  }
  const std::string symmetry = lower(banner[4]);
  if (symmetry != "symmetric" && symmetry != "general") {
    throw FormatError("mtx: unsupported symmetry '" + symmetry + "'");
  }
  const bool symmetric = symmetry == "symmetric";

  std::size_t idx = 1;
  auto next_data_line = [&]() -> std::optional<std::string_view> {
    while (idx < lines.size()) {
      std::string_view line = trim(lines[idx++]);
      if (line.empty() || line.front() == '%') continue;
      return line;
    }
    return std::nullopt;
  };

  const auto size_line = next_data_line();
  if (!size_line) throw FormatError("mtx: missing size line");
  const auto size_tokens = tokens(*size_line);
  if (size_tokens.size() != 3) throw FormatError("mtx: size line needs rows cols nnz");
  const std::size_t rows = parse_index(size_tokens[0], "mtx rows");
  const std::size_t cols = parse_index(size_tokens[1], "mtx cols");
  const std::size_t nnz = parse_index(size_tokens[2], "mtx nnz");
  if (rows != cols) throw FormatError("mtx: adjacency matrix must be square");
  if (rows == 0) throw FormatError("mtx: order must be at least 1");
  check_order(rows, "mtx input");

  std::vector<std::uint8_t> adj(rows * rows, 0);
  for (std::size_t e = 0; e < nnz; ++e) {
    const auto line = next_data_line();
    if (!line) throw FormatError("mtx: expected " + std::to_string(nnz) + " entries");
    const auto t = tokens(*line);
    if (t.size() != 2) throw FormatError("mtx: pattern entries need exactly two indices");
    const std::size_t i = parse_index(t[0], "mtx row");
    const std::size_t j = parse_index(t[1], "mtx col");
    if (i < 1 || j < 1 || i > rows || j > rows) {
      throw FormatError("mtx: entry (" + std::string(t[0]) + ", " + std::string(t[1]) +
                        ") out of range");
    }
    if (i == j) throw FormatError("mtx: self-loop at vertex " + std::to_string(i));
    auto& entry = adj[(i - 1) * rows + (j - 1)];
    if (entry != 0) throw FormatError("mtx: duplicate entry");
    entry = 1;
    if (symmetric) {
      auto& mirror = adj[(j - 1) * rows + (i - 1)];
      if (mirror != 0) throw FormatError("mtx: duplicate entry");
      mirror = 1;
    }
  }
  if (next_data_line()) throw FormatError("mtx: more entries than declared");
  if (!symmetric) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = i + 1; j < rows; ++j) {
        if (adj[i * rows + j] != adj[j * rows + i]) {
          throw FormatError("mtx: general matrix is not symmetric");
        }
      }
    }
  }
  return Graph::from_adjacency(rows, std::move(adj));
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# undirected edge list, 0-based vertex indices\n";
  out << "# order " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_edge_list(std::string_view text) {
  std::optional<std::size_t> declared;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t max_index = 0;
  for (auto raw : split_lines(text)) {
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto t = tokens(line.substr(1));
      if (t.size() == 2 && t[0] == "order") {
        if (declared) throw FormatError("edges: repeated order directive");
        declared = parse_index(t[1], "edges order");
      }
      continue;
    }
    const auto t = tokens(line);
    if (t.size() != 2) throw FormatError("edges: expected 'u v', got '" + std::string(line) + "'");
    const std::size_t u = parse_index(t[0], "edges");
    const std::size_t v = parse_index(t[1], "edges");
    if (u == v) throw FormatError("edges: self-loop at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
    max_index = std::max({max_index, u, v});
  }
  std::size_t order = declared.value_or(edges.empty() ? 0 : max_index + 1);
  if (order == 0) throw FormatError("edges: cannot infer order of an empty edge list");
  if (!edges.empty() && max_index >= order) {
    throw FormatError("edges: vertex " + std::to_string(max_index) + " exceeds declared order");
  }
  check_order(order, "edge list input");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : edges) {
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw FormatError("edges: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }
  return Graph::from_edges(order, edges);
}

std::string write_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::kGraph6: return encode_graph6(g) + "\n";
    case GraphFormat::kMatrixMarket: return write_matrix_market(g);
    case GraphFormat::kEdgeList: return write_edge_list(g);
  }
  throw FormatError("unknown graph format");
}

Graph read_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::kGraph6: {
      const auto line = trim(text);
      if (line.find('\n') != std::string_view::npos) {
        throw FormatError("graph6: expected a single graph per file");
      }
      return decode_graph6(line);
    }
    case GraphFormat::kMatrixMarket: return read_matrix_market(text);
    case GraphFormat::kEdgeList: return read_edge_list(text);
  }
  throw FormatError("unknown graph format");
}

void write_graph_file(const Graph& g, const std::filesystem::path& path, GraphFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << write_graph(g, format);
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

Graph read_graph_file(const std::filesystem::path& path, std::optional<GraphFormat> format) {
  if (!format) format = format_from_extension(path);
  if (!format) {
    throw FormatError("cannot infer the format of '" + path.string() +
                      "'; use a .g6/.mtx/.edges extension or pass a format");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_graph(buffer.str(), *format);
}

}  // namespace splitgraph
