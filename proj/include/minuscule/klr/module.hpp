#pragma once

#include "minuscule/cartan.hpp"
#include "minuscule/crystal.hpp"
#include "minuscule/sparse_matrix.hpp"
#include "minuscule/tableaux.hpp"

#include <map>
#include <string>
#include <vector>

namespace minuscule::klr {

using IndexSequence = Sequence;
using IntMatrixOp = SparseMatrix<std::int64_t>;

/// s_m(nu): swap positions m and m+1 (1-based).
inline IndexSequence place_swap(IndexSequence nu, int m) {
  std::swap(nu.at(static_cast<std::size_t>(m - 1)), nu.at(static_cast<std::size_t>(m)));
  return nu;
}

/// A homogeneous module given by exact matrices: e(nu) as 0/1 diagonal
/// projections, dots x_1..x_l, crossings tau_1..tau_{l-1}. Basis vector p
/// carries the index sequence sequences[p].
struct HomogeneousModule {
  CartanDatum datum;
  int node = 1;
  Weight weight;
  int height = 0;
  std::vector<IndexSequence> sequences;
  std::vector<std::string> labels;
  std::map<IndexSequence, IntMatrixOp> idempotents;
  std::vector<IntMatrixOp> dots;
  std::vector<IntMatrixOp> crossings;

  std::size_t dimension() const { return sequences.size(); }

  /// x_k, 1-based.
  const IntMatrixOp& x(int k) const { return dots.at(static_cast<std::size_t>(k - 1)); }
  /// tau_k, 1-based.
  const IntMatrixOp& tau(int k) const { return crossings.at(static_cast<std::size_t>(k - 1)); }

  /// e(nu); the zero matrix for sequences that do not occur.
  IntMatrixOp e(const IndexSequence& nu) const {
    auto it = idempotents.find(nu);
    return it == idempotents.end() ? IntMatrixOp(dimension(), dimension()) : it->second;
  }

  std::size_t index_of(const std::string& label) const {
    for (std::size_t p = 0; p < labels.size(); ++p)
      if (labels[p] == label) return p;
    throw Error("no basis label '" + label + "'");
  }
};

namespace detail {

/// Idempotents and zero dots from the basis sequences; crossings still empty.
inline HomogeneousModule skeleton(const CartanDatum& datum, int node, Weight weight,
                                  std::vector<IndexSequence> sequences, std::vector<std::string> labels) {
  HomogeneousModule m{datum, node, std::move(weight)};
  const auto d = sequences.size();
  m.height = d == 0 ? 0 : static_cast<int>(sequences.front().size());
  for (const auto& s : sequences)
    if (static_cast<int>(s.size()) != m.height) throw Error("basis sequences have different lengths");
  for (std::size_t p = 0; p < d; ++p) {
    auto [it, fresh] = m.idempotents.try_emplace(sequences[p], d, d);
    it->second.set(p, p, 1);
  }
  m.dots.assign(static_cast<std::size_t>(m.height), IntMatrixOp(d, d));
  m.crossings.assign(static_cast<std::size_t>(std::max(0, m.height - 1)), IntMatrixOp(d, d));
  m.sequences = std::move(sequences);
  m.labels = std::move(labels);
  return m;
}

}  // namespace detail

/// Module on a set of sequences: tau_j p(nu) = p(s_j nu) when s_j nu is again
/// a basis sequence, else 0.
inline HomogeneousModule module_from_sequences(const CartanDatum& datum, int node, Weight weight,
                                               std::vector<IndexSequence> sequences) {
  std::vector<std::string> labels;
  for (const auto& s : sequences) labels.push_back(to_string(s));
  auto m = detail::skeleton(datum, node, std::move(weight), std::move(sequences), std::move(labels));
  std::map<IndexSequence, std::size_t> where;
  for (std::size_t p = 0; p < m.dimension(); ++p) where.emplace(m.sequences[p], p);
  for (int j = 1; j < m.height; ++j)
    for (std::size_t p = 0; p < m.dimension(); ++p)
      if (auto it = where.find(place_swap(m.sequences[p], j)); it != where.end())
        m.crossings[j - 1].set(it->second, p, 1);
  return m;
}

/// Sp(b) on the paths Pa(b), for a minuscule crystal of type A, C, D or E.
inline HomogeneousModule build_module_paths(const CrystalGraph& crystal, std::size_t v,
                                            std::uint64_t cap = kDefaultPathCap) {
  if (crystal.datum().type() == CartanType::B)
    throw Error("type B modules are built from shifted tableaux (build_module_tableaux)");
  return module_from_sequences(crystal.datum(), crystal.node(), crystal.weight(v), paths(crystal, v, cap));
}

/// Tableau module on ST(lambda). Index sequences come from `res`; tau_j
/// exchanges the two entries sitting at sequence positions j and j+1,
/// i.e. entries N-j+1 and N-j, when the result is still standard.
inline HomogeneousModule module_from_tableaux(const CartanDatum& datum, int node, Weight weight,
                                              const StrictPartition& lambda, ResidueFn res) {
  const auto tableaux = standard_tableaux(lambda);
  std::vector<IndexSequence> seqs;
  std::vector<std::string> labels;
  for (const auto& t : tableaux) {
    seqs.push_back(residue_sequence(t, res));
    labels.push_back(t.str());
  }
  auto m = detail::skeleton(datum, node, std::move(weight), std::move(seqs), std::move(labels));
  std::map<StandardTableau, std::size_t> where;
  for (std::size_t p = 0; p < tableaux.size(); ++p) where.emplace(tableaux[p], p);
  const int n = lambda.size();
  for (int j = 1; j < n; ++j)
    for (std::size_t p = 0; p < tableaux.size(); ++p) {
      const auto swapped = tableaux[p].swap_entries(n - j);
      if (!swapped.is_standard()) continue;
      m.crossings[j - 1].set(where.at(swapped), p, 1);
    }
  return m;
}

/// Sp(b) for B(Lambda_1) of type B_n, lambda = lambda_b in Par_n.
inline HomogeneousModule build_module_tableaux(int n, const StrictPartition& lambda) {
  const auto datum = datum_for_partitions(n);
  return module_from_tableaux(datum, 1, wt(datum, lambda), lambda, residue);
}

/// The same tableau basis over D_{n+1}, with type D residues and
/// cyclotomic node 1.
inline HomogeneousModule build_module_tableaux_D(int n, const StrictPartition& lambda) {
  const auto datum = make_datum(CartanType::D, n + 1);
  return module_from_tableaux(datum, 1, wt_D(datum, lambda), lambda, residue_D);
}

/// Relabels letters by a diagram automorphism (a permutation of 1..rank,
/// sigma[i-1] = image of i) and moves the cyclotomic node and weight along;
/// crossings are kept as they are.
inline HomogeneousModule relabel_letters(const HomogeneousModule& m, const std::vector<int>& sigma) {
  auto image = [&](int i) { return sigma.at(static_cast<std::size_t>(i - 1)); };
  HomogeneousModule out = m;
  out.idempotents.clear();
  for (std::size_t p = 0; p < m.dimension(); ++p) {
    for (auto& letter : out.sequences[p]) letter = image(letter);
    auto [it, fresh] = out.idempotents.try_emplace(out.sequences[p], m.dimension(), m.dimension());
    it->second.set(p, p, 1);
  }
  out.node = image(m.node);
  for (int i = 1; i <= m.datum.rank(); ++i) out.weight.coords[image(i) - 1] = m.weight[i];
  return out;
}

}  // namespace minuscule::klr
