#include "minuscule/klr/basis.hpp"
#include "minuscule/klr/mutations.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace minuscule;
using namespace minuscule::klr;

namespace {

// Brute force: every permutation of positions, kept if it carries mu to nu;
// among those, the ones of minimal inversion count.
std::vector<std::vector<int>> minimal_place_permutations(const IndexSequence& nu, const IndexSequence& mu) {
  std::vector<int> perm(mu.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> best;
  int best_inv = 1 << 30;
  do {
    bool ok = true;
    for (std::size_t q = 0; q < mu.size() && ok; ++q) ok = nu[q] == mu[static_cast<std::size_t>(perm[q])];
    if (!ok) continue;
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b) inv += perm[a] > perm[b];
    if (inv < best_inv) {
      best_inv = inv;
      best.clear();
    }
    if (inv == best_inv) best.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

IndexSequence apply_word(const SwapWord& word, IndexSequence seq) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) std::swap(seq[*it - 1], seq[*it]);
  return seq;
}

}  // namespace

TEST(ConnectingPermutation, Examples) {
  EXPECT_TRUE(connecting_permutation({1, 2, 3}, {1, 2, 3}).empty());
  EXPECT_EQ(connecting_permutation({2, 1}, {1, 2}), (SwapWord{1}));
  EXPECT_EQ(connecting_permutation({3, 1, 2}, {1, 2, 3}), (SwapWord{1, 2}));
  const auto m = build_module_tableaux(3, StrictPartition({3, 1}));
  EXPECT_EQ(connecting_permutation(m.sequences[0], m.sequences[1]), (SwapWord{1}));
  EXPECT_THROW(connecting_permutation({1, 2}, {1, 1}), Error);
  EXPECT_THROW(connecting_permutation({1, 2}, {1, 2, 3}), Error);
}

TEST(ConnectingPermutationOracle, MatchesBruteForce) {
  const std::vector<std::pair<IndexSequence, IndexSequence>> cases{
      {{1, 2, 1, 3}, {1, 1, 2, 3}}, {{3, 2, 1, 2}, {2, 1, 2, 3}}, {{1, 3, 2, 4, 1}, {3, 1, 1, 4, 2}},
      {{2, 2, 1, 1}, {1, 1, 2, 2}}, {{4, 3, 2, 1}, {1, 2, 3, 4}}};
  for (const auto& [nu, mu] : cases) {
    const auto w = connecting_permutation(nu, mu);
    EXPECT_EQ(apply_word(w, mu), nu);
    const auto best = minimal_place_permutations(nu, mu);
    ASSERT_FALSE(best.empty());
    int inversions = 0;
    for (std::size_t a = 0; a < mu.size(); ++a)
      for (std::size_t b = a + 1; b < mu.size(); ++b) inversions += best.front()[a] > best.front()[b];
    EXPECT_EQ(static_cast<int>(w.size()), inversions);
    // The occurrence-preserving permutation is the unique minimal one.
    EXPECT_EQ(best.size(), 1u);
    EXPECT_EQ(word_permutation(w, mu.size()), best.front());
    EXPECT_EQ(matching_permutation(nu, mu), best.front());
    for (const auto& alt : permutation_reduced_words(nu, mu, 100)) {
      EXPECT_EQ(alt.size(), w.size());
      EXPECT_EQ(word_permutation(alt, mu.size()), best.front());
    }
  }
}

TEST(ConnectingPermutation, ReducedWordEnumeration) {
  // The longest element of S_3 has two reduced words.
  const auto words = permutation_reduced_words({3, 2, 1}, {1, 2, 3}, 10);
  EXPECT_EQ(words.size(), 2u);
  EXPECT_EQ(permutation_reduced_words({3, 2, 1}, {1, 2, 3}, 1).size(), 1u);
  EXPECT_EQ(permutation_reduced_words({4, 3, 2, 1}, {1, 2, 3, 4}, 100).size(), 16u);
}

TEST(OrthogonalSwapClosure, Examples) {
  const auto a3 = make_datum(CartanType::A, 3);
  const auto c = orthogonal_swap_closure(a3, {1, 3, 2});
  EXPECT_EQ(c.size(), 2u);
  EXPECT_TRUE(c.count({3, 1, 2}));
  EXPECT_EQ(orthogonal_swap_closure(a3, {1, 2, 3}).size(), 1u);
}

TEST(BasisElement, ThreeOneIsTheOffDiagonalUnit) {
  const auto m = build_module_tableaux(3, StrictPartition({3, 1}));
  const auto c = basis_element(m, 0, 1);
  EXPECT_EQ(c.word, (SwapWord{1}));
  EXPECT_EQ(c.matrix, IntMatrixOp::unit(2, 2, 0, 1));
  EXPECT_EQ(c.degree, 0);
  const auto same = basis_element(m, m.labels[0], m.labels[1]);
  EXPECT_EQ(same.matrix, c.matrix);
  const auto diag = basis_element(m, 1, 1);
  EXPECT_TRUE(diag.word.empty());
  EXPECT_EQ(diag.matrix, IntMatrixOp::unit(2, 2, 1, 1));
}

TEST(BasisElement, RejectsBrokenModule) {
  auto m = build_module_tableaux(3, StrictPartition({3, 1}));
  m.crossings[0] = IntMatrixOp(2, 2);
  EXPECT_THROW(basis_element(m, 0, 1), Error);
  const auto rep = check_cyclotomic_basis(m);
  EXPECT_FALSE(rep.passed());
  EXPECT_THROW(cyclotomic_basis(m), Error);
}

TEST(Basis, ThreeOneHasFourElements) {
  const auto m = build_module_tableaux(3, StrictPartition({3, 1}));
  const auto rep = check_cyclotomic_basis(m);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.dimension, 4u);
  EXPECT_EQ(rep.elements.size(), 4u);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed()) << c.name << ": " << c.witness;
  EXPECT_EQ(cyclotomic_basis(m).size(), 4u);
}

TEST(BasisProperty, DimensionIsSquareOfModuleDimension) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& lambda : strict_partitions(n)) {
      if (lambda.size() > 10) continue;
      const auto m = build_module_tableaux(n, lambda);
      const auto rep = check_cyclotomic_basis(m);
      SCOPED_TRACE(lambda.str());
      EXPECT_TRUE(rep.passed());
      EXPECT_EQ(rep.dimension, tableau_count(lambda) * tableau_count(lambda));
    }
}

TEST(BasisProperty, PathModules) {
  for (auto [d, node] : std::vector<std::pair<CartanDatum, int>>{{make_datum(CartanType::A, 4), 2},
                                                                 {make_datum(CartanType::D, 5), 1},
                                                                 {make_datum(CartanType::E6, 6), 1}}) {
    const CrystalGraph c(d, node);
    for (std::size_t v = 0; v < c.size(); ++v) {
      if (path_count(c, v) > 30) continue;
      const auto m = build_module_paths(c, v);
      const auto rep = check_cyclotomic_basis(m);
      EXPECT_TRUE(rep.passed()) << d.label() << " " << to_string(m.weight);
      EXPECT_EQ(rep.dimension, m.dimension() * m.dimension());
    }
  }
}

TEST(BasisProperty, ProbeSubsetAboveThreshold) {
  const auto m = build_module_tableaux(5, StrictPartition({5, 3, 1}));
  ASSERT_GT(m.dimension(), 20u);
  BasisOptions opt;
  opt.keep_elements = false;
  const auto rep = check_cyclotomic_basis(m, opt);
  EXPECT_TRUE(rep.passed());
  EXPECT_TRUE(rep.elements.empty());
  EXPECT_EQ(rep.dimension, m.dimension() * m.dimension());
  for (const auto& c : rep.checks)
    if (c.name == "composition") EXPECT_EQ(c.checked, 36u * 6u);
}

TEST(BasisProperty, CTypeBasesAreOneElement) {
  for (int n = 2; n <= 6; ++n) {
    const CrystalGraph c(make_datum(CartanType::C, n), n);
    for (std::size_t v = 0; v < c.size(); ++v) EXPECT_EQ(check_cyclotomic_basis(build_module_paths(c, v)).dimension, 1u);
  }
}
