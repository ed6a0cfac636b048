#include <gtest/gtest.h>

#include <limits>

#include "splitgraph/report.hpp"

namespace splitgraph {
namespace {

TEST(FormatDouble, FixedSeventeenDigits) {
  EXPECT_EQ(format_double(12.0), "12.0");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1e-8), "1e-08");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "null");
}

TEST(DumpJson, KeepsInsertionOrder) {
  OrderedJson j;
  j["z"] = 1;
  j["a"] = 2.5;
  j["m"] = {1.0, true, nullptr};
  EXPECT_EQ(dump_json(j, -1), R"({"z":1,"a":2.5,"m":[1.0,true,null]})");
}

TEST(ReportJson, FieldOrderAndVerdict) {
  FamilySpec spec;
  spec.corollary = CorollaryId::kC6_2;
  spec.parameters = {{"t", 1}};
  const OrderedJson j = to_json(verify_family(spec));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"corollary", "kind", "method", "parameters", "bases",
                                            "tolerance", "members", "groups", "orders_equal",
                                            "energies_equal", "formula_matches_oracle",
                                            "energy_equals_complete", "spectral_identities_hold",
                                            "cospectral", "verdict"}));
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["members"][0]["order"], 49);
}

TEST(ReportJson, Deterministic) {
  FamilySpec spec;
  spec.corollary = CorollaryId::kC5_9;
  spec.parameters = {{"t", 1}};
  EXPECT_EQ(dump_json(to_json(verify_family(spec))), dump_json(to_json(verify_family(spec))));
}

TEST(ReportTable, MentionsVerdict) {
  FamilySpec spec;
  spec.corollary = CorollaryId::kC5_6;
  const std::string table = render_table(verify_family(spec));
  EXPECT_NE(table.find("C5_6"), std::string::npos);
  EXPECT_NE(table.find("verdict: pass"), std::string::npos);
}

TEST(SpectrumJson, Multiplicities) {
  const OrderedJson j = spectrum_to_json(adjacency_spectrum(complete_graph(3)));
  EXPECT_EQ(j["order"], 3);
  ASSERT_EQ(j["multiplicities"].size(), 2u);
  EXPECT_EQ(j["multiplicities"][1]["multiplicity"], 2);
}

}  // namespace
}  // namespace splitgraph
