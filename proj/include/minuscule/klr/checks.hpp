#pragma once

#include "minuscule/crystal.hpp"
#include "minuscule/klr/module.hpp"
#include "minuscule/klr/qspec.hpp"
#include "minuscule/klr/relations.hpp"
#include "minuscule/tableaux.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace minuscule::klr {

/// Restriction from m to m-1 boxes: |ST(lambda)| splits over removable boxes,
/// and grouping ST(lambda) by the residue of the box holding N yields
/// exactly the tableau modules of the smaller shapes.
inline CheckReport branching_check(int n, const StrictPartition& lambda) {
  if (lambda.empty()) throw Error("branching_check needs |lambda| >= 1");
  if (lambda.largest() > n) throw Error("partition " + lambda.str() + " is not in Par_" + std::to_string(n));
  CheckReport rep{"branching " + lambda.str()};
  CheckResult count{"count"};
  CheckResult groups{"restriction"};
  CheckResult crystal_arrows{"crystal_arrows"};

  const auto tableaux = standard_tableaux(lambda);
  std::map<int, std::multiset<IndexSequence>> by_first;
  for (const auto& t : tableaux) {
    auto seq = residue_sequence(t);
    const int first = seq.front();
    by_first[first].insert(IndexSequence(seq.begin() + 1, seq.end()));
  }

  const auto datum = datum_for_partitions(n);
  const CrystalGraph crystal(datum, 1);
  const auto v = crystal.index_of(wt(datum, lambda));

  std::uint64_t total = 0;
  std::set<int> residues;
  for (const auto& b : lambda.removable_boxes()) {
    const auto smaller = lambda.remove(b);
    const auto sub = standard_tableaux(smaller);
    total += sub.size();
    const int i = residue(b);
    residues.insert(i);

    std::multiset<IndexSequence> expected;
    for (const auto& s : sub) expected.insert(residue_sequence(s));
    ++groups.checked;
    if (groups.passed() && by_first[i] != expected) {
      groups.status = Status::fail;
      groups.witness = "tableaux with N in a box of residue " + std::to_string(i) + " do not restrict to ST" +
                       smaller.str();
    }

    ++crystal_arrows.checked;
    const auto u = crystal.e(v, i);
    const auto step = partition_crystal_step(n, lambda, i, Direction::raise);
    if (crystal_arrows.passed() &&
        (u == CrystalGraph::npos || !step || *step != smaller || crystal.weight(u) != wt(datum, smaller))) {
      crystal_arrows.status = Status::fail;
      crystal_arrows.witness = "e_" + std::to_string(i) + " of " + lambda.str() + " does not remove " + to_string(b);
    }
  }
  for (int i = 1; i <= datum.rank(); ++i) {
    if (residues.count(i)) continue;
    ++crystal_arrows.checked;
    if (crystal_arrows.passed() && crystal.e(v, i) != CrystalGraph::npos) {
      crystal_arrows.status = Status::fail;
      crystal_arrows.witness = "e_" + std::to_string(i) + " of " + lambda.str() + " is defined without a box";
    }
  }
  for (const auto& [i, tails] : by_first)
    if (!residues.count(i) && groups.passed()) {
      groups.status = Status::fail;
      groups.witness = "first letter " + std::to_string(i) + " is not a removable residue";
    }

  ++count.checked;
  if (total != tableaux.size()) {
    count.status = Status::fail;
    count.witness = "|ST" + lambda.str() + "| = " + std::to_string(tableaux.size()) + " but the removals give " +
                    std::to_string(total);
  }
  rep.checks = {count, groups, crystal_arrows};
  return rep;
}

/// nu_{lambda_l} * ... * nu_{lambda_1} with nu_k = (k, ..., 2, 1).
inline IndexSequence head_sequence(const StrictPartition& lambda) {
  IndexSequence out;
  for (int r = lambda.length(); r >= 1; --r)
    for (int k = lambda.part(r); k >= 1; --k) out.push_back(k);
  return out;
}

/// Exactly one tableau of shape lambda has residue sequence
/// head_sequence(lambda), and it is the initial tableau T_0.
inline CheckResult head_witness_check(int n, const StrictPartition& lambda) {
  if (lambda.largest() > n) throw Error("partition " + lambda.str() + " is not in Par_" + std::to_string(n));
  CheckResult r{"head_witness"};
  const auto target = head_sequence(lambda);
  std::vector<StandardTableau> hits;
  for (const auto& t : standard_tableaux(lambda)) {
    ++r.checked;
    if (residue_sequence(t) == target) hits.push_back(t);
  }
  if (hits.size() != 1) {
    r.status = Status::fail;
    r.witness = std::to_string(hits.size()) + " tableaux have residue sequence " + to_string(target);
  } else if (!(hits.front() == initial_tableau(lambda))) {
    r.status = Status::fail;
    r.witness = hits.front().str() + " matches instead of T_0";
  }
  return r;
}

struct DimensionEntry {
  int level = 0;
  Weight weight;
  /// lambda_b in type B, the vertex weight otherwise.
  std::string label;
  std::uint64_t basis = 0;
  std::uint64_t dimension = 0;
};

struct DimensionTable {
  std::string datum_label;
  int node = 1;
  int max_m = 0;
  /// Highest level that has a vertex; levels past it are not listed.
  int top_level = 0;
  std::vector<DimensionEntry> entries;
  std::map<int, std::uint64_t> totals;
};

/// dim R^Lambda(xi) = |Pa(b)|^2 for every vertex b at level m <= max_m.
inline DimensionTable dimension_table(const CartanDatum& datum, int node, int max_m) {
  if (max_m < 0) throw Error("max_m must be non-negative");
  const CrystalGraph crystal(datum, node);
  const auto counts = path_counts(crystal);
  DimensionTable table{datum.label(), node, max_m, std::min(max_m, crystal.max_level())};
  const bool partitions = datum.type() == CartanType::B && node == 1;
  const auto lambdas = partitions ? partitions_by_weight(datum.rank()) : std::map<Weight, StrictPartition>{};
  for (int m = 0; m <= table.top_level; ++m) table.totals[m] = 0;
  for (std::size_t v = 0; v < crystal.size(); ++v) {
    const int m = crystal.level(v);
    if (m > table.top_level) continue;
    DimensionEntry e{m, crystal.weight(v), partitions ? lambdas.at(crystal.weight(v)).str() : to_string(crystal.weight(v)),
                     counts[v]};
    if (__builtin_mul_overflow(counts[v], counts[v], &e.dimension)) throw Error("dimension overflows 64 bits");
    table.totals[m] += e.dimension;
    table.entries.push_back(std::move(e));
  }
  std::stable_sort(table.entries.begin(), table.entries.end(), [](const DimensionEntry& a, const DimensionEntry& b) {
    return a.level != b.level ? a.level < b.level : a.label < b.label;
  });
  return table;
}

/// R^{Lambda_1}_{B_n}(m), R^{Lambda_1}_{D_{n+1}}(m) and R^{Lambda_2}_{D_{n+1}}(m)
/// through the shared tableau basis.
inline CheckReport isomorphism_check_B_D(int n, int max_m) {
  if (n < 2) throw Error("isomorphism_check_B_D needs n >= 2");
  CheckReport rep{"B" + std::to_string(n) + " vs D" + std::to_string(n + 1)};
  CheckResult b_rel{"B_relations"};
  CheckResult d_rel{"D_relations"};
  CheckResult d_wt{"D_weight_in_orbit"};
  CheckResult d_paths{"D_paths"};
  CheckResult per_lambda{"dimension_per_partition"};
  CheckResult per_level{"dimension_per_level"};
  CheckResult aut_rel{"automorphism_relations"};
  CheckResult aut_paths{"automorphism_paths"};

  const auto datum_B = make_datum(CartanType::B, n);
  const auto datum_D = make_datum(CartanType::D, n + 1);
  const CrystalGraph crystal_D1(datum_D, 1);
  const CrystalGraph crystal_D2(datum_D, 2);
  const auto qs_B = standard_qspecs(datum_B);
  const auto qs_D = standard_qspecs(datum_D);
  std::vector<int> sigma(static_cast<std::size_t>(n + 1));
  for (int i = 1; i <= n + 1; ++i) sigma[i - 1] = i;
  std::swap(sigma[0], sigma[1]);

  auto relations = [](CheckResult& into, const HomogeneousModule& m, const std::vector<QSpec>& qs,
                      const std::string& what) {
    for (const auto& q : qs) {
      const auto r = check_klr_relations(m, q);
      for (const auto& f : r.families) absorb(into, f, what + " [" + q.name() + "] " + f.name);
    }
    absorb(into, check_cyclotomic(m), what);
  };
  auto same_paths = [](CheckResult& into, const CrystalGraph& crystal, const HomogeneousModule& m,
                       const std::string& what) {
    ++into.checked;
    const auto v = crystal.find(m.weight);
    if (v == CrystalGraph::npos) {
      if (!into.failed()) into = {into.name, Status::fail, what + ": weight " + to_string(m.weight) + " not in orbit",
                                  into.checked};
      return;
    }
    const auto ps = paths(crystal, v);
    if (std::set<IndexSequence>(ps.begin(), ps.end()) !=
            std::set<IndexSequence>(m.sequences.begin(), m.sequences.end()) ||
        ps.size() != m.dimension())
      if (!into.failed()) into = {into.name, Status::fail, what + ": sequences differ from Pa(b)", into.checked};
  };

  const auto counts_D1 = path_counts(crystal_D1);
  const auto counts_D2 = path_counts(crystal_D2);
  for (int m = 0; m <= max_m; ++m) {
    std::uint64_t total_B = 0;
    for (const auto& lambda : enumerate_strict_partitions(n, m)) {
      const auto what = lambda.str();
      const auto mb = build_module_tableaux(n, lambda);
      const auto md = build_module_tableaux_D(n, lambda);
      relations(b_rel, mb, qs_B, "B " + what);
      relations(d_rel, md, qs_D, "D " + what);

      ++d_wt.checked;
      if (crystal_D1.find(md.weight) == CrystalGraph::npos && !d_wt.failed()) {
        d_wt.status = Status::fail;
        d_wt.witness = "wt_D" + what + " = " + to_string(md.weight) + " is not in the orbit of Lambda_1";
      }
      same_paths(d_paths, crystal_D1, md, what);

      ++per_lambda.checked;
      if (mb.dimension() != md.dimension() && !per_lambda.failed()) {
        per_lambda.status = Status::fail;
        per_lambda.witness = what + ": " + std::to_string(mb.dimension()) + " vs " + std::to_string(md.dimension());
      }

      const auto swapped = relabel_letters(md, sigma);
      relations(aut_rel, swapped, qs_D, "Lambda_2 " + what);
      same_paths(aut_paths, crystal_D2, swapped, what);
      total_B += mb.dimension() * mb.dimension();
    }
    std::uint64_t total_D1 = 0;
    std::uint64_t total_D2 = 0;
    for (std::size_t v = 0; v < crystal_D1.size(); ++v)
      if (crystal_D1.level(v) == m) total_D1 += counts_D1[v] * counts_D1[v];
    for (std::size_t v = 0; v < crystal_D2.size(); ++v)
      if (crystal_D2.level(v) == m) total_D2 += counts_D2[v] * counts_D2[v];
    ++per_level.checked;
    if ((total_B != total_D1 || total_B != total_D2) && !per_level.failed()) {
      per_level.status = Status::fail;
      per_level.witness = "level " + std::to_string(m) + ": " + std::to_string(total_B) + ", " +
                          std::to_string(total_D1) + ", " + std::to_string(total_D2);
    }
  }
  rep.checks = {b_rel, d_rel, d_wt, d_paths, per_lambda, per_level, aut_rel, aut_paths};
  return rep;
}

}  // namespace minuscule::klr
