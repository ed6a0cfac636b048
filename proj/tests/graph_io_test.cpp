#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "splitgraph/graph_io.hpp"

namespace splitgraph {
namespace {

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(encode_graph6(Graph::empty(1)), "@");
  EXPECT_EQ(encode_graph6(Graph::empty(2)), "A?");
  EXPECT_EQ(encode_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(encode_graph6(complete_graph(3)), "Bw");
}

TEST(Graph6, DecodeKnownStrings) {
  EXPECT_EQ(decode_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(decode_graph6(">>graph6<<Bw"), complete_graph(3));
  EXPECT_EQ(decode_graph6("Cl"), cycle_graph(4));
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(decode_graph6(""), FormatError);
  EXPECT_THROW(decode_graph6("B"), FormatError);     // body too short
  EXPECT_THROW(decode_graph6("Bww"), FormatError);   // body too long
  EXPECT_THROW(decode_graph6("Bx"), FormatError);    // nonzero padding
  EXPECT_THROW(decode_graph6("B\x7f"), FormatError);
}

TEST(Graph6, LongHeaderRoundTrip) {
  std::mt19937_64 rng(3);
  const Graph g = random_graph(70, 0.1, rng);
  const std::string text = encode_graph6(g);
  EXPECT_EQ(text[0], '~');
  EXPECT_EQ(decode_graph6(text), g);
}

TEST(Graph6, RandomRoundTrip) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 40;
    const Graph g = random_graph(n, 0.3, rng);
    EXPECT_EQ(decode_graph6(encode_graph6(g)), g) << "n=" << n;
  }
}

TEST(MatrixMarket, WritesLowerTriangle) {
  EXPECT_EQ(write_matrix_market(path_graph(3)),
            "%%MatrixMarket matrix coordinate pattern symmetric\n3 3 2\n2 1\n3 2\n");
}

TEST(MatrixMarket, ReadsGeneralAndRejectsAsymmetry) {
  const std::string general =
      "%%MatrixMarket matrix coordinate pattern general\n% comment\n3 3 4\n1 2\n2 1\n2 3\n3 2\n";
  EXPECT_EQ(read_matrix_market(general), path_graph(3));
  const std::string asym = "%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 2\n";
  EXPECT_THROW(read_matrix_market(asym), FormatError);
  const std::string loop = "%%MatrixMarket matrix coordinate pattern symmetric\n2 2 1\n1 1\n";
  EXPECT_THROW(read_matrix_market(loop), FormatError);
}

TEST(EdgeList, KeepsIsolatedVertices) {
  const std::vector<Graph> parts{complete_graph(2), Graph::empty(3)};
  const Graph g = disjoint_union(parts);
  EXPECT_EQ(read_edge_list(write_edge_list(g)), g);
}

TEST(Formats, AllRoundTripRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const Graph g = random_graph(1 + rng() % 20, 0.35, rng);
    for (GraphFormat f : {GraphFormat::kGraph6, GraphFormat::kMatrixMarket, GraphFormat::kEdgeList}) {
      EXPECT_EQ(read_graph(write_graph(g, f), f), g) << to_string(f);
    }
  }
}

TEST(Formats, NamesAndExtensions) {
  EXPECT_EQ(parse_graph_format("mtx"), GraphFormat::kMatrixMarket);
  EXPECT_EQ(parse_graph_format("graph6"), GraphFormat::kGraph6);
  EXPECT_EQ(parse_graph_format("edges"), GraphFormat::kEdgeList);
  EXPECT_THROW(parse_graph_format("dot"), FormatError);
  EXPECT_EQ(format_from_extension("a/b.g6"), GraphFormat::kGraph6);
  EXPECT_EQ(format_from_extension("x.mtx"), GraphFormat::kMatrixMarket);
  EXPECT_FALSE(format_from_extension("x.dat").has_value());
}

TEST(Formats, FileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "splitgraph_io_test";
  std::filesystem::create_directories(dir);
  const Graph g = complete_bipartite(3, 4);
  for (const char* name : {"g.g6", "g.mtx", "g.edges"}) {
    const auto path = dir / name;
    write_graph_file(g, path, *format_from_extension(path));
    EXPECT_EQ(read_graph_file(path), g) << name;
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace splitgraph
