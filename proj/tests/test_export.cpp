#include "minuscule/export.hpp"

#include <gtest/gtest.h>

using namespace minuscule;
using namespace minuscule::io;

TEST(Export, DatumRoundTrip) {
  for (auto d : {make_datum(CartanType::A, 3), make_datum(CartanType::B, 4), make_datum(CartanType::C, 2),
                 make_datum(CartanType::D, 5), make_datum(CartanType::E6, 6), make_datum(CartanType::E7, 7)}) {
    const auto j = to_json(d);
    EXPECT_EQ(j.at("schema"), kDatumSchema);
    const auto back = datum_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.matrix(), d.matrix());
    EXPECT_EQ(back.label(), d.label());
  }
  auto j = to_json(make_datum(CartanType::B, 3));
  j["cartan_matrix"][0][1] = -1;
  EXPECT_THROW(datum_from_json(j), Error);
  j = to_json(make_datum(CartanType::B, 3));
  j["schema"] = "cartan-datum/0";
  EXPECT_THROW(datum_from_json(j), Error);
}

TEST(Export, DatumFields) {
  const auto j = to_json(make_datum(CartanType::D, 4));
  EXPECT_EQ(j.at("minuscule_nodes"), Json::parse("[1,2,4]"));
  EXPECT_EQ(j.at("symmetrizers"), Json::parse("[1,1,1,1]"));
  EXPECT_EQ(j.at("type"), "D");
}

TEST(Export, CrystalDotAndJson) {
  const CrystalGraph c(make_datum(CartanType::C, 3), 3);
  const auto dot = crystal_dot(c);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("v5 [label="), std::string::npos);
  std::size_t arrows = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++arrows;
  EXPECT_EQ(arrows, 5u);
  const auto j = crystal_json(c);
  EXPECT_EQ(j.at("schema"), kCrystalSchema);
  EXPECT_EQ(j.at("vertices").size(), 6u);
  EXPECT_EQ(j.at("edges").size(), 5u);
  EXPECT_NE(crystal_text(c).find("6 vertices, 5 edges"), std::string::npos);
}

TEST(Export, Deterministic) {
  const auto d = make_datum(CartanType::D, 5);
  EXPECT_EQ(crystal_json(CrystalGraph(d, 1)).dump(), crystal_json(CrystalGraph(d, 1)).dump());
  const auto t1 = to_json(klr::dimension_table(make_datum(CartanType::B, 3), 1, 6)).dump(2);
  const auto t2 = to_json(klr::dimension_table(make_datum(CartanType::B, 3), 1, 6)).dump(2);
  EXPECT_EQ(t1, t2);
  const auto s1 = to_json(run_sweep(make_datum(CartanType::A, 2), 1)).dump();
  const auto s2 = to_json(run_sweep(make_datum(CartanType::A, 2), 1)).dump();
  EXPECT_EQ(s1, s2);
}

TEST(Export, DimensionText) {
  const auto t = klr::dimension_table(make_datum(CartanType::B, 2), 1, 5);
  const auto text = dimension_text(t);
  EXPECT_NE(text.find("totals: 0:1 1:1 2:1 3:1\n"), std::string::npos);
  const auto j = to_json(t);
  EXPECT_EQ(j.at("entries").size(), 4u);
  EXPECT_EQ(j.at("top_level"), 3);
}

TEST(Export, CheckResultsAndTableaux) {
  const CheckResult bad{"braid", Status::fail, "tau_1 tau_2 tau_1", 3};
  const auto j = to_json(bad);
  EXPECT_EQ(j.at("status"), "fail");
  EXPECT_EQ(j.at("witness"), "tau_1 tau_2 tau_1");
  EXPECT_FALSE(to_json(CheckResult{"ok"}).contains("witness"));
  const StandardTableau t(StrictPartition({3, 1}), {{1, 2, 3}, {4}});
  EXPECT_EQ(to_json(t).dump(), R"({"schema":"tableau/1","shape":[3,1],"entries":[[1,2,3],[4]]})");
}

TEST(Export, ModuleTriplets) {
  const auto m = klr::build_module_tableaux(3, StrictPartition({3, 1}));
  const auto text = module_triplets(m);
  EXPECT_NE(text.find("dim 2"), std::string::npos);
  EXPECT_NE(text.find("tau_1\n"), std::string::npos);
}
