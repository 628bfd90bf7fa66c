#pragma once

#include "minuscule/klr/module.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace minuscule::klr {

/// Word in adjacent transpositions, display order: the LAST letter is the
/// first swap applied, so tau_w = tau_{w_1} ... tau_{w_r}.
using SwapWord = std::vector<int>;

namespace detail {

/// For each position of mu, the position in nu holding the same occurrence
/// of that letter (k-th occurrence to k-th occurrence).
inline std::vector<int> occurrence_targets(const IndexSequence& nu, const IndexSequence& mu) {
  if (nu.size() != mu.size()) throw Error("sequences " + to_string(nu) + " and " + to_string(mu) + " differ in length");
  std::map<int, std::vector<int>> where;
  for (std::size_t q = nu.size(); q-- > 0;) where[nu[q]].push_back(static_cast<int>(q));
  std::vector<int> target(mu.size());
  for (std::size_t p = 0; p < mu.size(); ++p) {
    auto& slots = where[mu[p]];
    if (slots.empty()) throw Error(to_string(nu) + " is not a rearrangement of " + to_string(mu));
    target[p] = slots.back();
    slots.pop_back();
  }
  return target;
}

}  // namespace detail

/// w_{nu,mu}: carries mu to nu by place permutation, matching occurrences
/// of each letter in order and bubble-sorting.
inline SwapWord connecting_permutation(const IndexSequence& nu, const IndexSequence& mu) {
  auto target = detail::occurrence_targets(nu, mu);
  std::vector<int> applied;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t m = 0; m + 1 < target.size(); ++m)
      if (target[m] > target[m + 1]) {
        std::swap(target[m], target[m + 1]);
        applied.push_back(static_cast<int>(m + 1));
        swapped = true;
      }
  }
  return SwapWord(applied.rbegin(), applied.rend());
}

/// The place permutation realized by a word acting on positions 1..len:
/// result[q] = original position now sitting at q (0-based).
inline std::vector<int> word_permutation(const SwapWord& word, std::size_t len) {
  std::vector<int> items(len);
  for (std::size_t q = 0; q < len; ++q) items[q] = static_cast<int>(q);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    std::swap(items.at(static_cast<std::size_t>(*it - 1)), items.at(static_cast<std::size_t>(*it)));
  return items;
}

inline std::vector<int> matching_permutation(const IndexSequence& nu, const IndexSequence& mu) {
  const auto target = detail::occurrence_targets(nu, mu);
  std::vector<int> items(mu.size());
  for (std::size_t p = 0; p < mu.size(); ++p) items[static_cast<std::size_t>(target[p])] = static_cast<int>(p);
  return items;
}

/// Breadth-first search from mu over swaps of adjacent orthogonal letters.
/// Returns, for every reachable sequence, the place permutation of the first
/// path found to it.
inline std::map<IndexSequence, std::vector<int>> orthogonal_swap_closure(const CartanDatum& datum,
                                                                         const IndexSequence& mu) {
  std::map<IndexSequence, std::vector<int>> seen;
  std::vector<int> start(mu.size());
  for (std::size_t q = 0; q < mu.size(); ++q) start[q] = static_cast<int>(q);
  seen.emplace(mu, start);
  std::deque<IndexSequence> queue{mu};
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    const auto items = seen.at(cur);
    for (std::size_t m = 0; m + 1 < cur.size(); ++m) {
      if (datum.a(cur[m], cur[m + 1]) != 0) continue;
      auto next = cur;
      std::swap(next[m], next[m + 1]);
      if (seen.count(next)) continue;
      auto moved = items;
      std::swap(moved[m], moved[m + 1]);
      seen.emplace(next, std::move(moved));
      queue.push_back(std::move(next));
    }
  }
  return seen;
}

/// Up to `limit` reduced words of the permutation carrying mu to nu, each in
/// display order.
inline std::vector<SwapWord> permutation_reduced_words(const IndexSequence& nu, const IndexSequence& mu,
                                                       std::size_t limit) {
  std::vector<SwapWord> out;
  std::vector<int> rank = detail::occurrence_targets(nu, mu);
  std::vector<int> applied;
  auto rec = [&](auto&& self) -> void {
    if (out.size() >= limit) return;
    bool sorted = true;
    for (std::size_t m = 0; m + 1 < rank.size(); ++m) {
      if (rank[m] < rank[m + 1]) continue;
      sorted = false;
      std::swap(rank[m], rank[m + 1]);
      applied.push_back(static_cast<int>(m + 1));
      self(self);
      applied.pop_back();
      std::swap(rank[m], rank[m + 1]);
      if (out.size() >= limit) return;
    }
    if (sorted) out.emplace_back(applied.rbegin(), applied.rend());
  };
  rec(rec);
  return out;
}

/// c_{nu,mu} = e(nu) tau_w e(mu) as a matrix on the module.
struct BasisElement {
  std::string target;
  std::string source;
  SwapWord word;
  IntMatrixOp matrix;
  int degree = 0;
};

namespace detail {

using SparseColumn = std::vector<std::pair<std::size_t, std::int64_t>>;

inline SparseColumn act_on(const IntMatrixOp& a, const SparseColumn& v) {
  std::map<std::size_t, std::int64_t> acc;
  for (const auto& [c, x] : v)
    a.for_col(c, [&](std::size_t r, std::int64_t y) { acc[r] += y * x; });
  SparseColumn out;
  for (const auto& [r, x] : acc)
    if (x != 0) out.emplace_back(r, x);
  return out;
}

/// e(nu) tau_{w_1} ... tau_{w_r} e(mu), evaluated right to left one column
/// at a time.
inline IntMatrixOp evaluate(const HomogeneousModule& m, const IndexSequence& nu, const SwapWord& word,
                            const IndexSequence& mu) {
  const auto d = m.dimension();
  IntMatrixOp out(d, d);
  const auto emu = m.e(mu);
  const auto enu = m.e(nu);
  std::map<std::size_t, SparseColumn> columns;
  emu.for_each([&](std::size_t r, std::size_t c, std::int64_t v) { columns[c].emplace_back(r, v); });
  for (auto& [c, col] : columns) {
    for (auto it = word.rbegin(); it != word.rend() && !col.empty(); ++it) col = act_on(m.tau(*it), col);
    for (const auto& [r, v] : act_on(enu, col)) out.set(r, c, v);
  }
  return out;
}

/// Sum of deg(tau_{w_k}) along the word, starting from mu.
inline int word_degree(const CartanDatum& datum, const SwapWord& word, IndexSequence seq) {
  int deg = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const auto k = static_cast<std::size_t>(*it - 1);
    deg -= datum.root_pairing(seq[k], seq[k + 1]);
    std::swap(seq[k], seq[k + 1]);
  }
  return deg;
}

}  // namespace detail

inline constexpr std::size_t kDefaultWordBound = 8;

/// c_{nu,mu} for two basis labels. Throws unless the result is the
/// elementary matrix at (nu, mu) and every checked alternative reduced word
/// of w_{nu,mu} (up to `word_bound` of them) gives the same matrix.
inline BasisElement basis_element(const HomogeneousModule& m, std::size_t target, std::size_t source,
                                  std::size_t word_bound = kDefaultWordBound) {
  const auto& nu = m.sequences.at(target);
  const auto& mu = m.sequences.at(source);
  BasisElement c{m.labels[target], m.labels[source], connecting_permutation(nu, mu)};
  c.matrix = detail::evaluate(m, nu, c.word, mu);
  c.degree = detail::word_degree(m.datum, c.word, mu);
  const auto unit = IntMatrixOp::unit(m.dimension(), m.dimension(), target, source);
  if (!(c.matrix == unit))
    throw Error("c_{" + c.target + "," + c.source + "} is not the elementary matrix");
  for (const auto& alt : permutation_reduced_words(nu, mu, word_bound))
    if (!(detail::evaluate(m, nu, alt, mu) == c.matrix))
      throw Error("c_{" + c.target + "," + c.source + "} depends on the reduced word: " + to_string(alt) + " vs " +
                  to_string(c.word));
  return c;
}

inline BasisElement basis_element(const HomogeneousModule& m, const std::string& target, const std::string& source,
                                  std::size_t word_bound = kDefaultWordBound) {
  return basis_element(m, m.index_of(target), m.index_of(source), word_bound);
}

struct BasisOptions {
  std::size_t word_bound = kDefaultWordBound;
  /// Products c_{a,b} c_{b',c} are checked for all index triples up to this
  /// module dimension; above it, for a fixed set of spread-out indices.
  std::size_t full_product_dim = 20;
  bool keep_elements = true;
};

/// Cb(b) and the checks on it.
struct BasisReport {
  std::size_t module_dimension = 0;
  std::uint64_t dimension = 0;
  std::vector<BasisElement> elements;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (c.failed()) return false;
    return true;
  }
};

namespace detail {

inline std::vector<std::size_t> product_indices(std::size_t d, std::size_t full) {
  std::vector<std::size_t> idx;
  if (d <= full) {
    for (std::size_t p = 0; p < d; ++p) idx.push_back(p);
    return idx;
  }
  for (std::size_t k = 0; k < 6; ++k) idx.push_back(k * (d - 1) / 5);
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

}  // namespace detail

/// All |basis|^2 elements c_{nu,mu}, with elementary-matrix, connecting
/// permutation oracle, reduced-word independence, degree, orthogonality,
/// composition and completeness checks.
inline BasisReport check_cyclotomic_basis(const HomogeneousModule& m, const BasisOptions& opt = {}) {
  const auto d = m.dimension();
  BasisReport rep;
  rep.module_dimension = d;
  CheckResult elementary{"elementary"};
  CheckResult oracle{"connecting_oracle"};
  CheckResult independence{"word_independence"};
  CheckResult degree{"degree"};
  CheckResult orthogonality{"orthogonality"};
  CheckResult composition{"composition"};
  CheckResult completeness{"completeness"};
  auto fail = [](CheckResult& r, std::string w) {
    if (!r.failed()) {
      r.status = Status::fail;
      r.witness = std::move(w);
    }
  };

  std::vector<std::vector<IntMatrixOp>> kept;
  const auto probe = detail::product_indices(d, opt.full_product_dim);
  std::map<std::pair<std::size_t, std::size_t>, IntMatrixOp> probes;
  auto is_probe = [&](std::size_t p) { return std::binary_search(probe.begin(), probe.end(), p); };

  IntMatrixOp diagonal_sum(d, d);
  for (std::size_t s = 0; s < d; ++s) {
    const auto& mu = m.sequences[s];
    const auto closure = orthogonal_swap_closure(m.datum, mu);
    for (std::size_t t = 0; t < d; ++t) {
      const auto& nu = m.sequences[t];
      const std::string pair = "(" + m.labels[t] + ", " + m.labels[s] + ")";
      BasisElement c{m.labels[t], m.labels[s]};
      try {
        c.word = connecting_permutation(nu, mu);
      } catch (const Error& e) {
        fail(elementary, pair + ": " + e.what());
        continue;
      }
      ++oracle.checked;
      auto it = closure.find(nu);
      if (it == closure.end())
        fail(oracle, pair + ": not joined by orthogonal swaps");
      else if (it->second != word_permutation(c.word, mu.size()) ||
               it->second != matching_permutation(nu, mu))
        fail(oracle, pair + ": search and matching disagree");

      c.matrix = detail::evaluate(m, nu, c.word, mu);
      c.degree = detail::word_degree(m.datum, c.word, mu);
      ++elementary.checked;
      if (!(c.matrix == IntMatrixOp::unit(d, d, t, s))) fail(elementary, pair);
      ++degree.checked;
      if (c.degree != 0) fail(degree, pair + " has degree " + std::to_string(c.degree));
      for (const auto& alt : permutation_reduced_words(nu, mu, opt.word_bound)) {
        ++independence.checked;
        if (!(detail::evaluate(m, nu, alt, mu) == c.matrix))
          fail(independence, pair + ": words " + to_string(alt) + " and " + to_string(c.word));
      }
      if (t == s) diagonal_sum = diagonal_sum + c.matrix;
      if (is_probe(t) && is_probe(s)) probes.emplace(std::make_pair(t, s), c.matrix);
      ++rep.dimension;
      if (opt.keep_elements) rep.elements.push_back(std::move(c));
    }
  }

  const IntMatrixOp zero(d, d);
  for (const auto& [ab, x] : probes)
    for (const auto& [bc, y] : probes) {
      const auto prod = x * y;
      if (ab.second == bc.first) {
        ++composition.checked;
        auto it = probes.find({ab.first, bc.second});
        if (it == probes.end() || !(prod == it->second))
          fail(composition, "c_{" + m.labels[ab.first] + "," + m.labels[ab.second] + "} c_{" + m.labels[bc.first] +
                                "," + m.labels[bc.second] + "}");
      } else {
        ++orthogonality.checked;
        if (!(prod == zero))
          fail(orthogonality, "c_{" + m.labels[ab.first] + "," + m.labels[ab.second] + "} c_{" + m.labels[bc.first] +
                                  "," + m.labels[bc.second] + "} != 0");
      }
    }
  ++completeness.checked;
  if (!(diagonal_sum == IntMatrixOp::identity(d))) fail(completeness, "sum of c_{nu,nu} is not the identity");
  if (rep.dimension != static_cast<std::uint64_t>(d) * d)
    fail(elementary, std::to_string(rep.dimension) + " elements for a module of dimension " + std::to_string(d));

  rep.checks = {elementary, oracle, independence, degree, orthogonality, composition, completeness};
  return rep;
}

/// Cb(b): every c_{nu,mu}, in (source, target) basis order.
inline std::vector<BasisElement> cyclotomic_basis(const HomogeneousModule& m, std::size_t word_bound = kDefaultWordBound) {
  BasisOptions opt;
  opt.word_bound = word_bound;
  auto rep = check_cyclotomic_basis(m, opt);
  for (const auto& c : rep.checks)
    if (c.failed()) throw Error("matrix-unit basis check '" + c.name + "' failed: " + c.witness);
  return std::move(rep.elements);
}

}  // namespace minuscule::klr
