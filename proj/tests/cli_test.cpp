#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "splitgraph/graph_io.hpp"
#include "splitgraph/spectral.hpp"

namespace splitgraph::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("splitgraph_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenCompleteIsGraph6) {
  const Result r = invoke({"gen", "complete", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "Bw\n");
}

TEST_F(CliTest, GenWritesFilesInRequestedFormat) {
  ASSERT_EQ(invoke({"gen", "cycle", "4", "-o", path("c4.mtx")}).code, kExitOk);
  const Graph g = read_graph_file(path("c4.mtx"));
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.edge_count().value, 4u);
  ASSERT_EQ(invoke({"gen", "union", "complete:7", "complete:8", "--format", "edges", "-o", path("u.txt")}).code,
            kExitOk);
  EXPECT_EQ(read_graph_file(path("u.txt")).order(), 15u);
}

TEST_F(CliTest, GenRejectsUnknownFamily) {
  EXPECT_EQ(invoke({"gen", "petersen", "10"}).code, kExitUsage);
  EXPECT_EQ(invoke({"gen", "complete"}).code, kExitUsage);
}

TEST_F(CliTest, ConstructOperators) {
  ASSERT_EQ(invoke({"gen", "cycle", "4", "-o", path("c4.g6")}).code, kExitOk);
  ASSERT_EQ(invoke({"construct", "split", "2", "2", "-i", path("c4.g6"), "-o", path("s.g6")}).code, kExitOk);
  const Graph s = read_graph_file(path("s.g6"));
  EXPECT_EQ(s, generalized_splitting(cycle_graph(4), {2, 2}));
  ASSERT_EQ(invoke({"construct", "split", "2", "2", "-i", path("c4.g6"), "--route", "neighborhood", "-o",
                    path("n.g6")}).code,
            kExitOk);
  EXPECT_EQ(read_graph_file(path("n.g6")), s);
  ASSERT_EQ(invoke({"construct", "shadow", "3", "-i", path("c4.g6"), "-o", path("d.g6")}).code, kExitOk);
  EXPECT_EQ(read_graph_file(path("d.g6")).order(), 12u);
  ASSERT_EQ(invoke({"gen", "complete", "3", "-o", path("k3.g6")}).code, kExitOk);
  ASSERT_EQ(invoke({"construct", "kron", "-i", path("c4.g6"), "--with", path("k3.g6"), "-o", path("x.g6")}).code,
            kExitOk);
  EXPECT_EQ(read_graph_file(path("x.g6")).order(), 12u);
  EXPECT_EQ(invoke({"construct", "split", "0", "2", "-i", path("c4.g6")}).code, kExitUsage);
  EXPECT_EQ(invoke({"construct", "kron", "-i", path("c4.g6")}).code, kExitUsage);
}

TEST_F(CliTest, EnergyOfK7) {
  ASSERT_EQ(invoke({"gen", "complete", "7", "-o", path("k7.g6")}).code, kExitOk);
  const Result r = invoke({"energy", path("k7.g6")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["formula_energy"].get<double>(), 12.0);
  EXPECT_NEAR(j["oracle_energy"].get<double>(), 12.0, 1e-10);
  EXPECT_NE(r.out.find("\"formula_energy\": 12.0"), std::string::npos);
}

TEST_F(CliTest, EnergyBothRoutesOnSplitOfK3) {
  ASSERT_EQ(invoke({"gen", "complete", "3", "-o", path("k3.g6")}).code, kExitOk);
  const Result r = invoke({"energy", path("k3.g6"), "--op", "split:2:1", "--method", "both"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["order"], 9);
  EXPECT_DOUBLE_EQ(j["formula_energy"].get<double>(), 16.0);
  EXPECT_NEAR(j["oracle_energy"].get<double>(), 16.0, 1e-8);
  EXPECT_LT(j["delta"].get<double>(), 1e-8);
}

TEST_F(CliTest, EnergyFormulaNeedsClosedForm) {
  ASSERT_EQ(invoke({"gen", "cycle", "5", "-o", path("c5.g6")}).code, kExitOk);
  EXPECT_EQ(invoke({"energy", path("c5.g6"), "--method", "formula"}).code, kExitUsage);
  const Result both = invoke({"energy", path("c5.g6")});
  EXPECT_EQ(both.code, kExitOk);
  EXPECT_TRUE(nlohmann::json::parse(both.out)["formula_energy"].is_null());
}

TEST_F(CliTest, JacobiSolverGivesSameEnergy) {
  ASSERT_EQ(invoke({"gen", "cycle", "5", "-o", path("c5.g6")}).code, kExitOk);
  const auto qr = nlohmann::json::parse(invoke({"energy", path("c5.g6"), "--op", "split:2:3"}).out);
  const Result r = invoke({"--solver", "jacobi", "energy", path("c5.g6"), "--op", "split:2:3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto jacobi = nlohmann::json::parse(r.out);
  EXPECT_EQ(jacobi["eigensolver"], "jacobi");
  EXPECT_NEAR(jacobi["oracle_energy"].get<double>(), qr["oracle_energy"].get<double>(), 1e-10);
  EXPECT_EQ(default_eigen_solver(), EigenSolver::kTridiagonalQR);
}

TEST_F(CliTest, SpectrumOfK3) {
  ASSERT_EQ(invoke({"gen", "complete", "3", "-o", path("k3.g6")}).code, kExitOk);
  const Result r = invoke({"spectrum", path("k3.g6")});
  ASSERT_EQ(r.code, kExitOk);
  const auto values = nlohmann::json::parse(r.out)["oracle"]["eigenvalues"].get<std::vector<double>>();
  ASSERT_EQ(values.size(), 3u);
  EXPECT_NEAR(values[0], 2.0, 1e-12);
  EXPECT_NEAR(values[1], -1.0, 1e-12);
  EXPECT_NEAR(values[2], -1.0, 1e-12);
}

TEST_F(CliTest, SpectrumStructuredRouteAgrees) {
  ASSERT_EQ(invoke({"gen", "cycle", "4", "-o", path("c4.g6")}).code, kExitOk);
  for (const char* op : {"split:2:2", "shadow-split:2:3", "shadow:3", "msplit:2"}) {
    const Result r = invoke({"spectrum", path("c4.g6"), "--op", op, "--method", "both"});
    EXPECT_EQ(r.code, kExitOk) << op;
    EXPECT_TRUE(nlohmann::json::parse(r.out)["agree"].get<bool>()) << op;
  }
}

TEST_F(CliTest, VerifyExitStatus) {
  const Result pass = invoke({"verify", "C6_2", "t=1"});
  EXPECT_EQ(pass.code, kExitOk);
  const auto j = nlohmann::json::parse(pass.out);
  EXPECT_EQ(j["members"][0]["order"], 49);
  EXPECT_NEAR(j["members"][0]["measured_energy"].get<double>(), 96.0, 1e-8);
  const Result c59 = invoke({"verify", "C5_9", "t=1", "base=C_4"});
  EXPECT_EQ(c59.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(c59.out)["members"].size(), 4u);
  EXPECT_EQ(invoke({"verify", "C5_4", "p=2", "q=5"}).code, kExitVerificationFailed);
}

TEST_F(CliTest, VerifyUsageErrors) {
  EXPECT_EQ(invoke({"verify", "C5_3", "m=2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "C5_3", "m=2", "t=1", "x=3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "C6_1", "k=1", "base=C_4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "C9_9"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "C5_6", "--tol", "-1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "C5_6", "--method", "guess"}).code, kExitUsage);
}

TEST_F(CliTest, VerifyWithBaseFile) {
  ASSERT_EQ(invoke({"gen", "path", "5", "--format", "mtx", "-o", path("p5.mtx")}).code, kExitOk);
  const Result r = invoke({"verify", "C5_8", "m=1", "--base", path("p5.mtx")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
}

TEST_F(CliTest, SweepReportsAndExitStatus) {
  const Result c61 = invoke({"sweep", "C6_1", "k=1..5"});
  ASSERT_EQ(c61.code, kExitOk);
  const auto reports = nlohmann::json::parse(c61.out);
  ASSERT_EQ(reports.size(), 5u);
  for (const auto& r : reports) EXPECT_EQ(r["verdict"], "pass");
  const Result c53 = invoke({"sweep", "C5_3", "m=2..4", "t=1..(m-1)", "--jobs", "3"});
  EXPECT_EQ(c53.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(c53.out).size(), 6u);
  EXPECT_EQ(invoke({"sweep", "C5_4", "p=1..2", "q=4*p-1"}).code, kExitVerificationFailed);
  EXPECT_EQ(invoke({"sweep", "C6_1", "k=5..1"}).code, kExitUsage);
}

TEST_F(CliTest, OutputIsByteIdentical) {
  const std::vector<std::string> args{"sweep", "C5_3", "m=2..3", "t=1..m-1", "--jobs", "2"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST_F(CliTest, ConvertRoundTrip) {
  ASSERT_EQ(invoke({"gen", "bipartite", "2", "3", "-o", path("b.g6")}).code, kExitOk);
  ASSERT_EQ(invoke({"convert", path("b.g6"), "-o", path("b.mtx")}).code, kExitOk);
  ASSERT_EQ(invoke({"convert", path("b.mtx"), "--format", "edges", "-o", path("b.edges")}).code, kExitOk);
  ASSERT_EQ(invoke({"convert", path("b.edges"), "--format", "graph6", "-o", path("b2.g6")}).code, kExitOk);
  EXPECT_EQ(read_graph_file(path("b2.g6")), complete_bipartite(2, 3));
  EXPECT_EQ(invoke({"convert", path("missing.g6")}).code, kExitRuntime);
}

TEST_F(CliTest, CapOverrideReportsOrder) {
  ::setenv("SPECTRAL_MAX_ORDER", "50", 1);
  const Result r = invoke({"verify", "C6_3", "t=1"});
  ::unsetenv("SPECTRAL_MAX_ORDER");
  EXPECT_NE(r.code, kExitOk);
  EXPECT_NE(r.err.find("105"), std::string::npos) << r.err;
}

TEST(Generators, Labels) {
  EXPECT_EQ(parse_generator("K_7"), complete_graph(7));
  EXPECT_EQ(parse_generator("K_{2,3}"), complete_bipartite(2, 3));
  EXPECT_EQ(parse_generator("C_4"), cycle_graph(4));
  EXPECT_EQ(parse_generator("P_4"), path_graph(4));
  EXPECT_EQ(parse_generator("empty:5"), Graph::empty(5));
  EXPECT_THROW(parse_generator("wheel:5"), std::invalid_argument);
}

TEST(Operators, Parsing) {
  EXPECT_TRUE((std::get<SplitParams>(parse_operator("split:2:3")) == SplitParams{2, 3}));
  EXPECT_TRUE((std::get<SplitParams>(parse_operator("msplit:4")) == SplitParams{1, 4}));
  EXPECT_TRUE((std::get<ShadowSplitParams>(parse_operator("shadow-split:1:2")) == ShadowSplitParams{1, 2}));
  EXPECT_EQ(std::get<ShadowCopies>(parse_operator("shadow:3")).m, 3u);
  EXPECT_THROW(parse_operator("split:2"), std::invalid_argument);
  EXPECT_THROW(parse_operator("rotate:2"), std::invalid_argument);
}

}  // namespace
}  // namespace splitgraph::cli
