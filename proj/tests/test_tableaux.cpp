#include "minuscule/crystal.hpp"
#include "minuscule/tableaux.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace minuscule;

namespace {

// Strict partitions with parts <= n are the subsets of {1..n}.
std::set<std::vector<int>> subsets_by_size(int n, int m) {
  std::set<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> parts;
    int sum = 0;
    for (int k = n; k >= 1; --k)
      if (mask & (1u << (k - 1))) {
        parts.push_back(k);
        sum += k;
      }
    if (sum == m) out.insert(parts);
  }
  return out;
}

// Brute force: fill the boxes with every permutation of 1..N.
std::size_t brute_force_tableaux(const StrictPartition& lambda) {
  const auto boxes = lambda.boxes();
  std::vector<int> perm(boxes.size());
  std::iota(perm.begin(), perm.end(), 1);
  std::size_t count = 0;
  do {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.length()));
    for (std::size_t k = 0; k < boxes.size(); ++k) rows[boxes[k].row - 1].push_back(perm[k]);
    count += StandardTableau(lambda, rows).is_standard();
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Schur: g = N! / prod lambda_i! * prod_{i<j} (lambda_i - lambda_j) / (lambda_i + lambda_j).
std::uint64_t schur_count(const StrictPartition& lambda) {
  Rational g(1);
  int n = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int k = 1; k <= lambda.part(i); ++k) g *= Rational(++n, k);
    for (int j = i + 1; j <= lambda.length(); ++j)
      g *= Rational(lambda.part(i) - lambda.part(j), lambda.part(i) + lambda.part(j));
  }
  EXPECT_EQ(g.denominator(), 1);
  return static_cast<std::uint64_t>(g.numerator());
}

const StandardTableau example_74() {
  return StandardTableau(StrictPartition({7, 4}), {{1, 2, 4, 5, 7, 8, 11}, {3, 6, 9, 10}});
}

}  // namespace

TEST(Residue, Examples) {
  EXPECT_EQ(residue({2, 6}), 5);
  EXPECT_EQ(residue({4, 4}), 1);
  EXPECT_EQ(residue({1, 9}), 9);
  EXPECT_THROW(residue({3, 2}), Error);
  EXPECT_EQ(residue_D({1, 1}), 1);
  EXPECT_EQ(residue_D({2, 2}), 2);
  EXPECT_EQ(residue_D({3, 3}), 1);
  EXPECT_EQ(residue_D({2, 4}), 4);
  EXPECT_EQ(residue_D({1, 2}), 3);
  EXPECT_THROW(residue_D({2, 1}), Error);
}

TEST(Residue, FigureForNineSixThreeOne) {
  const StrictPartition lambda({9, 6, 3, 1});
  const std::vector<std::vector<int>> expected{
      {1, 2, 3, 4, 5, 6, 7, 8, 9}, {1, 2, 3, 4, 5, 6}, {1, 2, 3}, {1}};
  for (int i = 1; i <= 4; ++i)
    for (int j = 0; j < lambda.part(i); ++j) EXPECT_EQ(residue({i, i + j}), expected[i - 1][j]);
}

TEST(StrictPartition, ValidationAndShape) {
  EXPECT_THROW(StrictPartition({2, 2}), Error);
  EXPECT_THROW(StrictPartition({1, 2}), Error);
  EXPECT_THROW(StrictPartition({3, 0}), Error);
  const StrictPartition l({3, 1});
  EXPECT_TRUE(l.contains({1, 3}));
  EXPECT_TRUE(l.contains({2, 2}));
  EXPECT_FALSE(l.contains({2, 3}));
  EXPECT_FALSE(l.contains({2, 1}));
  EXPECT_EQ(l.size(), 4);
}

TEST(StrictPartition, EnumerationExamples) {
  EXPECT_EQ(enumerate_strict_partitions(5, 0), (std::vector<StrictPartition>{StrictPartition{}}));
  EXPECT_EQ(enumerate_strict_partitions(2, 3), (std::vector<StrictPartition>{StrictPartition({2, 1})}));
  std::size_t total = 0;
  for (int m = 0; m <= 6; ++m) total += enumerate_strict_partitions(3, m).size();
  EXPECT_EQ(total, 8u);
}

TEST(StrictPartitionOracle, MatchesSubsets) {
  for (int n = 0; n <= 10; ++n)
    for (int m = 0; m <= n * (n + 1) / 2; ++m) {
      std::set<std::vector<int>> got;
      const auto list = enumerate_strict_partitions(n, m);
      for (const auto& l : list) got.insert(l.parts());
      EXPECT_EQ(got, subsets_by_size(n, m));
      EXPECT_EQ(got.size(), list.size());
      EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
    }
}

TEST(StandardTableaux, Examples) {
  EXPECT_EQ(standard_tableaux(StrictPartition({5})).size(), 1u);
  EXPECT_EQ(standard_tableaux(StrictPartition({3, 1})).size(), 2u);
  EXPECT_EQ(standard_tableaux(StrictPartition({2, 1})).size(), 1u);
  EXPECT_EQ(standard_tableaux(StrictPartition{}).size(), 1u);
  EXPECT_TRUE(example_74().is_standard());
}

TEST(StandardTableauxOracle, BruteForceAndSchurFormula) {
  for (const auto& lambda : strict_partitions(5)) {
    SCOPED_TRACE(lambda.str());
    const auto list = standard_tableaux(lambda);
    for (const auto& t : list) EXPECT_TRUE(t.is_standard());
    EXPECT_EQ(std::set<StandardTableau>(list.begin(), list.end()).size(), list.size());
    if (lambda.size() <= 8) EXPECT_EQ(list.size(), brute_force_tableaux(lambda));
    EXPECT_EQ(list.size(), schur_count(lambda));
    EXPECT_EQ(tableau_count(lambda), list.size());
  }
  EXPECT_EQ(tableau_count(StrictPartition({5, 4, 3, 2, 1})), 286u);
  EXPECT_EQ(tableau_count(StrictPartition({4, 3, 2, 1})), 12u);
}

TEST(ResidueSequence, Examples) {
  const StandardTableau row(StrictPartition({2}), {{1, 2}});
  EXPECT_EQ(residue_sequence(row), (Sequence{2, 1}));
  EXPECT_EQ(residue_sequence(example_74()), (Sequence{7, 4, 3, 6, 5, 2, 4, 3, 1, 2, 1}));
  EXPECT_EQ(residue_sequence(initial_tableau(StrictPartition({2, 1}))), (Sequence{1, 2, 1}));
  EXPECT_EQ(residue_sequence(initial_tableau(StrictPartition({2, 1})), residue_D), (Sequence{2, 3, 1}));
}

TEST(Weight, TableauWeights) {
  const auto b2 = make_datum(CartanType::B, 2);
  const auto l1 = fundamental_weight(b2, 1);
  EXPECT_EQ(wt(b2, StrictPartition{}), l1);
  EXPECT_EQ(wt(b2, StrictPartition({1})), l1 - simple_root(b2, 1));
  EXPECT_EQ(wt(b2, StrictPartition({2, 1})), l1 - 2 * simple_root(b2, 1) - simple_root(b2, 2));
  EXPECT_THROW(wt(b2, StrictPartition({3})), Error);
  const auto d3 = make_datum(CartanType::D, 3);
  EXPECT_THROW(wt_D(d3, StrictPartition({3})), Error);
  EXPECT_EQ(wt_D(d3, StrictPartition({1})), fundamental_weight(d3, 1) - simple_root(d3, 1));
}

TEST(PartitionCrystal, StepExamples) {
  EXPECT_EQ(partition_crystal_step(3, StrictPartition{}, 1, Direction::lower), StrictPartition({1}));
  EXPECT_EQ(partition_crystal_step(3, StrictPartition({2}), 1, Direction::lower), StrictPartition({2, 1}));
  EXPECT_FALSE(partition_crystal_step(3, StrictPartition({2, 1}), 2, Direction::raise).has_value());
  EXPECT_FALSE(partition_crystal_step(2, StrictPartition({2}), 3, Direction::lower).has_value());
}

TEST(PartitionCrystalProperty, IsomorphicToOrbitCrystal) {
  for (int n = 1; n <= 7; ++n) {
    const auto d = datum_for_partitions(n);
    const CrystalGraph c(d, 1);
    for (const auto& lambda : strict_partitions(n)) {
      const auto v = c.index_of(wt(d, lambda));
      for (int i = 1; i <= n; ++i) {
        const auto down = partition_crystal_step(n, lambda, i, Direction::lower);
        const auto up = partition_crystal_step(n, lambda, i, Direction::raise);
        ASSERT_EQ(down.has_value(), c.f(v, i) != CrystalGraph::npos) << lambda.str() << " f_" << i;
        ASSERT_EQ(up.has_value(), c.e(v, i) != CrystalGraph::npos) << lambda.str() << " e_" << i;
        if (down) EXPECT_EQ(c.weight(c.f(v, i)), wt(d, *down));
        if (up) EXPECT_EQ(c.weight(c.e(v, i)), wt(d, *up));
      }
    }
  }
}

TEST(PartitionBijection, SmallAndLarge) {
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(check_partition_bijection(n).passed()) << n;
  EXPECT_EQ(check_partition_bijection(3).checked, 8u);
  EXPECT_EQ(check_partition_bijection(8).checked, 256u);
  EXPECT_THROW(check_partition_bijection(0), Error);
}

// Letters k and k+1 lie in different rows and columns exactly when swapping
// them keeps the tableau standard, exactly when the residues at the
// corresponding sequence positions are orthogonal.
TEST(TableauProperty, SwapCriterion) {
  for (int n = 2; n <= 5; ++n) {
    const auto d = make_datum(CartanType::B, n);
    for (const auto& lambda : strict_partitions(n))
      for (const auto& t : standard_tableaux(lambda)) {
        if (lambda.empty()) continue;
        const auto seq = residue_sequence(t);
        EXPECT_EQ(seq.back(), 1);
        const int size = t.size();
        for (int k = 1; k < size; ++k) {
          const Box a = t.box_of(k);
          const Box b = t.box_of(k + 1);
          const bool apart = a.row != b.row && a.col != b.col;
          const bool standard = t.swap_entries(k).is_standard();
          const int p = size - k;  // sequence position of entry k+1
          EXPECT_EQ(apart, standard) << t.str() << " k=" << k;
          EXPECT_EQ(standard, d.a(seq[p - 1], seq[p]) == 0) << t.str() << " k=" << k;
        }
      }
  }
}

TEST(TableauProperty, BranchingCount) {
  for (const auto& lambda : strict_partitions(6)) {
    if (lambda.empty()) continue;
    std::uint64_t sum = 0;
    for (const auto& b : lambda.removable_boxes()) sum += standard_tableaux(lambda.remove(b)).size();
    EXPECT_EQ(sum, standard_tableaux(lambda).size()) << lambda.str();
  }
}

TEST(Render, ShiftedDiagram) {
  EXPECT_EQ(render(StandardTableau(StrictPartition({3, 1}), {{1, 2, 3}, {4}})), "  1  2  3\n     4\n");
  EXPECT_EQ(example_74().str(), "[1,2,4,5,7,8,11/3,6,9,10]");
}
