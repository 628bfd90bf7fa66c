#include "minuscule/klr/checks.hpp"
#include "minuscule/sweep.hpp"

#include <gtest/gtest.h>

using namespace minuscule;
using namespace minuscule::klr;

namespace {

// Hook length formula for an ordinary Young diagram.
std::uint64_t hook_count(const std::vector<int>& rows) {
  int n = 0;
  for (int r : rows) n += r;
  Rational f(1);
  for (int k = 1; k <= n; ++k) f *= k;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < rows[i]; ++j) {
      int below = 0;
      for (std::size_t t = i + 1; t < rows.size(); ++t) below += rows[t] > j;
      f /= rows[i] - j - 1 + below + 1;
    }
  return static_cast<std::uint64_t>(f.numerator());
}

// Partitions inside a k x c box, with their sizes.
void box_partitions(int k, int c, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == k) return;
  const int limit = cur.empty() ? c : cur.back();
  for (int p = 1; p <= limit; ++p) {
    cur.push_back(p);
    box_partitions(k, c, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST(Branching, Examples) {
  for (const auto& parts : std::vector<std::vector<int>>{{1}, {3, 1}, {2}, {3, 2, 1}, {4, 2}}) {
    const StrictPartition lambda(parts);
    const auto rep = branching_check(4, lambda);
    EXPECT_TRUE(rep.passed()) << lambda.str();
    EXPECT_EQ(rep.checks.size(), 3u);
  }
  EXPECT_EQ(branching_check(3, StrictPartition({3, 1})).check("restriction").checked, 2u);
  EXPECT_THROW(branching_check(3, StrictPartition{}), Error);
  EXPECT_THROW(branching_check(2, StrictPartition({3})), Error);
  EXPECT_THROW(branching_check(2, StrictPartition({2})).check("missing"), std::out_of_range);
}

TEST(HeadWitness, Examples) {
  EXPECT_EQ(head_sequence(StrictPartition({3})), (IndexSequence{3, 2, 1}));
  EXPECT_EQ(head_sequence(StrictPartition({2, 1})), (IndexSequence{1, 2, 1}));
  EXPECT_EQ(head_sequence(StrictPartition({3, 1})), (IndexSequence{1, 3, 2, 1}));
  for (const auto& parts : std::vector<std::vector<int>>{{1}, {4}, {2, 1}, {3, 1}, {4, 3, 1}})
    EXPECT_TRUE(head_witness_check(4, StrictPartition(parts)).passed());
  EXPECT_EQ(head_sequence(StrictPartition({2, 1})), residue_sequence(initial_tableau(StrictPartition({2, 1}))));
}

TEST(DimensionTable, TypeBExamples) {
  const auto b3 = dimension_table(make_datum(CartanType::B, 3), 1, 6);
  EXPECT_EQ(b3.top_level, 6);
  EXPECT_EQ(b3.totals.at(4), 4u);  // (3,1) with two tableaux
  EXPECT_EQ(b3.totals.at(3), 2u);  // (3) and (2,1)
  const auto b2 = dimension_table(make_datum(CartanType::B, 2), 1, 10);
  EXPECT_EQ(b2.top_level, 3);
  for (int m = 0; m <= 3; ++m) EXPECT_EQ(b2.totals.at(m), 1u);
  EXPECT_EQ(b2.entries.back().label, "(2,1)");
  EXPECT_THROW(dimension_table(make_datum(CartanType::B, 2), 1, -1), Error);
}

TEST(DimensionTableOracle, TypeBMatchesTableauCounts) {
  for (int n = 2; n <= 6; ++n) {
    const auto t = dimension_table(make_datum(CartanType::B, n), 1, 12);
    for (const auto& [m, total] : t.totals) {
      std::uint64_t expected = 0;
      for (const auto& lambda : enumerate_strict_partitions(n, m)) expected += tableau_count(lambda) * tableau_count(lambda);
      EXPECT_EQ(total, expected) << "n=" << n << " m=" << m;
    }
  }
}

TEST(DimensionTableOracle, TypeAMatchesHookLengths) {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto t = dimension_table(make_datum(CartanType::A, n), k, 20);
      std::map<int, std::uint64_t> expected;
      std::vector<int> cur;
      std::vector<std::vector<int>> shapes;
      box_partitions(k, n + 1 - k, cur, shapes);
      for (const auto& s : shapes) {
        int m = 0;
        for (int r : s) m += r;
        const auto f = hook_count(s);
        expected[m] += f * f;
      }
      EXPECT_EQ(t.totals, expected) << "A" << n << " node " << k;
    }
}

TEST(DimensionTable, TypeCIsOneEverywhere) {
  for (int n = 2; n <= 6; ++n) {
    const auto t = dimension_table(make_datum(CartanType::C, n), n, 4 * n);
    EXPECT_EQ(t.top_level, 2 * n - 1);
    for (const auto& [m, total] : t.totals) EXPECT_EQ(total, 1u);
  }
}

TEST(Isomorphism, BAndDAgree) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {3, 6}, {4, 5}}) {
    const auto rep = isomorphism_check_B_D(n, m);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.passed()) << rep.subject << " " << c.name << ": " << c.witness;
    EXPECT_GT(rep.check("automorphism_paths").checked, 0u);
  }
  EXPECT_THROW(isomorphism_check_B_D(1, 2), Error);
}

TEST(Sweep, SmallCrystalsPass) {
  const std::vector<std::pair<CartanDatum, int>> cases{{make_datum(CartanType::A, 2), 1},
                                                       {make_datum(CartanType::B, 3), 1},
                                                       {make_datum(CartanType::C, 3), 3},
                                                       {make_datum(CartanType::D, 4), 1}};
  for (const auto& [d, node] : cases) {
    const auto rep = run_sweep(d, node);
    EXPECT_TRUE(rep.passed()) << d.label();
    for (const auto& c : rep.summary()) EXPECT_FALSE(c.failed()) << d.label() << " " << c.name << ": " << c.witness;
    EXPECT_EQ(rep.vertices.size(), CrystalGraph(d, node).size());
  }
}

TEST(Sweep, LevelBoundAndPathCap) {
  SweepOptions opt;
  opt.max_level = 2;
  const auto rep = run_sweep(make_datum(CartanType::E6, 6), 1, opt);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.vertices.size(), 27u);
  for (const auto& v : rep.vertices)
    if (v.level > 2) {
      ASSERT_EQ(v.checks.size(), 1u);
      EXPECT_EQ(v.checks.front().status, Status::skipped);
    }

  SweepOptions capped;
  capped.path_cap = 1;
  const auto r2 = run_sweep(make_datum(CartanType::A, 3), 2, capped);
  bool skipped = false;
  for (const auto& v : r2.vertices)
    for (const auto& c : v.checks) skipped = skipped || c.status == Status::skipped;
  EXPECT_TRUE(skipped);
  EXPECT_TRUE(r2.passed());
}

TEST(PartitionSweep, AllChecksPass) {
  for (int n = 1; n <= 4; ++n) {
    const auto rep = run_partition_sweep(n, 10);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.passed()) << n << " " << c.name << ": " << c.witness;
  }
}
