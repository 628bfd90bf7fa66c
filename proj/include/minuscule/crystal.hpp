#pragma once

#include "minuscule/cartan.hpp"
#include "minuscule/weyl.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace minuscule {

/// Path from the highest weight vertex, stored in display order
/// (i_1, ..., i_l) for f_{i_1} ... f_{i_l} b_Lambda: the LAST letter is
/// applied first.
using Path = Sequence;

class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t count) : Error(what), count_(count) {}
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_;
};

inline constexpr std::uint64_t kDefaultPathCap = 1'000'000;
inline constexpr int kDefaultWordCap = 16;

/// The orbit realization of the crystal B(Lambda_i) for a minuscule node i:
/// f_j(mu) = mu - alpha_j when <h_j, mu> = 1, e_j(mu) = mu + alpha_j when
/// <h_j, mu> = -1.
class CrystalGraph {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  CrystalGraph(CartanDatum datum, int node) : datum_(std::move(datum)), node_(node) {
    datum_.check_node(node);
    if (!datum_.is_minuscule_node(node))
      throw Error("node " + std::to_string(node) + " is not minuscule in " + datum_.label());
    vertices_ = orbit(datum_, fundamental_weight(datum_, node));
    for (std::size_t v = 0; v < vertices_.size(); ++v) index_.emplace(vertices_[v], v);
    const auto r = static_cast<std::size_t>(datum_.rank());
    down_.assign(vertices_.size(), std::vector<std::size_t>(r, npos));
    up_.assign(vertices_.size(), std::vector<std::size_t>(r, npos));
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      for (int j = 1; j <= datum_.rank(); ++j) {
        if (vertices_[v][j] == 1) {
          const auto t = index_.at(vertices_[v] - simple_root(datum_, j));
          down_[v][j - 1] = t;
          up_[t][j - 1] = v;
        }
      }
    }
    highest_ = index_.at(fundamental_weight(datum_, node));
    levels_.reserve(vertices_.size());
    const auto top = fundamental_weight(datum_, node);
    for (const auto& mu : vertices_) levels_.push_back(root_coordinates(datum_, top - mu)->height());
  }

  const CartanDatum& datum() const { return datum_; }
  int node() const { return node_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Weight>& vertices() const { return vertices_; }
  const Weight& weight(std::size_t v) const { return vertices_.at(v); }
  std::size_t highest() const { return highest_; }
  /// Ht(Lambda_i - wt(v)).
  int level(std::size_t v) const { return levels_.at(v); }
  int max_level() const {
    int m = 0;
    for (int l : levels_) m = std::max(m, l);
    return m;
  }

  std::size_t find(const Weight& mu) const {
    auto it = index_.find(mu);
    return it == index_.end() ? npos : it->second;
  }
  std::size_t index_of(const Weight& mu) const {
    auto v = find(mu);
    if (v == npos) throw Error("weight " + to_string(mu) + " is not a vertex of B(Lambda_" + std::to_string(node_) +
                               ") in " + datum_.label());
    return v;
  }

  /// f_j(v), or npos.
  std::size_t f(std::size_t v, int j) const { return down_.at(v).at(letter(j)); }
  /// e_j(v), or npos.
  std::size_t e(std::size_t v, int j) const { return up_.at(v).at(letter(j)); }
  int epsilon(std::size_t v, int j) const { return std::max(0, -weight(v)[j]); }
  int phi(std::size_t v, int j) const { return std::max(0, weight(v)[j]); }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& row : down_)
      for (auto t : row) n += t != npos;
    return n;
  }

 private:
  std::size_t letter(int j) const {
    datum_.check_node(j);
    return static_cast<std::size_t>(j - 1);
  }

  CartanDatum datum_;
  int node_;
  std::vector<Weight> vertices_;
  std::map<Weight, std::size_t> index_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<int> levels_;
  std::size_t highest_ = 0;
};

inline CrystalGraph build_crystal(const CartanDatum& datum, int node) { return CrystalGraph(datum, node); }

/// |Pa(b)| for every vertex, by dynamic programming over e-arrows.
inline std::vector<std::uint64_t> path_counts(const CrystalGraph& crystal) {
  std::vector<std::size_t> order(crystal.size());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return crystal.level(x) < crystal.level(y); });
  std::vector<std::uint64_t> count(crystal.size(), 0);
  for (auto v : order) {
    if (v == crystal.highest()) {
      count[v] = 1;
      continue;
    }
    std::uint64_t total = 0;
    for (int j = 1; j <= crystal.datum().rank(); ++j) {
      const auto u = crystal.e(v, j);
      if (u == CrystalGraph::npos) continue;
      if (__builtin_add_overflow(total, count[u], &total)) throw Error("path count overflows 64 bits");
    }
    count[v] = total;
  }
  return count;
}

inline std::uint64_t path_count(const CrystalGraph& crystal, std::size_t v) { return path_counts(crystal).at(v); }

namespace detail {

inline void collect_paths(const CrystalGraph& crystal, std::size_t v, Path& prefix, std::vector<Path>& out,
                          std::uint64_t limit) {
  if (out.size() >= limit) return;
  if (v == crystal.highest()) {
    out.emplace_back(prefix.begin(), prefix.end());
    return;
  }
  for (int j = 1; j <= crystal.datum().rank(); ++j) {
    const auto u = crystal.e(v, j);
    if (u == CrystalGraph::npos) continue;
    prefix.push_back(j);
    collect_paths(crystal, u, prefix, out, limit);
    prefix.pop_back();
    if (out.size() >= limit) return;
  }
}

}  // namespace detail

/// Pa(b) in lexicographic order. Walking up from b, the first e-letter is
/// i_1, so the DFS emits paths in display order directly.
inline std::vector<Path> paths(const CrystalGraph& crystal, std::size_t v, std::uint64_t cap = kDefaultPathCap) {
  const auto n = path_count(crystal, v);
  if (n > cap)
    throw CapExceeded("vertex " + to_string(crystal.weight(v)) + " has " + std::to_string(n) +
                          " paths, above the materialization cap " + std::to_string(cap),
                      n);
  std::vector<Path> out;
  out.reserve(n);
  Path scratch;
  detail::collect_paths(crystal, v, scratch, out, n);
  return out;
}

inline std::vector<Path> paths(const CrystalGraph& crystal, const Weight& b, std::uint64_t cap = kDefaultPathCap) {
  return paths(crystal, crystal.index_of(b), cap);
}

/// The k lexicographically-first paths to v.
inline std::vector<Path> sample_paths(const CrystalGraph& crystal, std::size_t v, std::uint64_t k) {
  std::vector<Path> out;
  Path scratch;
  detail::collect_paths(crystal, v, scratch, out, k);
  return out;
}

/// Follows a path from the highest weight, applying the last letter first.
/// Returns npos as soon as an f-arrow is undefined.
inline std::size_t follow_path(const CrystalGraph& crystal, const Path& p) {
  std::size_t v = crystal.highest();
  for (auto it = p.rbegin(); it != p.rend() && v != CrystalGraph::npos; ++it) v = crystal.f(v, *it);
  return v;
}

/// Bound on how many paths are compared when asserting that w(b) does not
/// depend on the chosen path.
inline constexpr std::uint64_t kPathIndependenceSample = 4096;

/// w(b) = s_{i_1} ... s_{i_l} for any (i_1, ..., i_l) in Pa(b).
inline WeylElement minuscule_element(const CrystalGraph& crystal, std::size_t v) {
  const auto sample = sample_paths(crystal, v, kPathIndependenceSample);
  const auto w = WeylElement::from_word(crystal.datum(), sample.front());
  for (const auto& p : sample)
    if (!(WeylElement::from_word(crystal.datum(), p) == w))
      throw std::logic_error("w(b) depends on the chosen path at " + to_string(crystal.weight(v)));
  return w;
}

/// Pa(b) equals the set of reduced words of w(b). Skipped when l(w(b))
/// exceeds the reduced-word cap.
inline CheckResult check_path_word_bijection(const CrystalGraph& crystal, std::size_t v,
                                             int word_cap = kDefaultWordCap,
                                             std::uint64_t path_cap = kDefaultPathCap) {
  CheckResult r{"path_word_bijection"};
  if (crystal.level(v) > word_cap) {
    r.status = Status::skipped;
    r.witness = "l(w(b)) = " + std::to_string(crystal.level(v)) + " exceeds word cap " + std::to_string(word_cap);
    return r;
  }
  const auto& datum = crystal.datum();
  const auto w = minuscule_element(crystal, v);
  if (reduced_word_count(datum, w) > path_cap || path_count(crystal, v) > path_cap) {
    r.status = Status::skipped;
    r.witness = "too many words to materialize";
    return r;
  }
  const auto words = reduced_words(datum, w);
  const auto ps = paths(crystal, v, path_cap);
  r.checked = ps.size();
  const std::set<Path> pset(ps.begin(), ps.end());
  if (pset != words) {
    r.status = Status::fail;
    for (const auto& p : ps)
      if (!words.count(p)) {
        r.witness = "path " + to_string(p) + " is not a reduced word of w(b)";
        return r;
      }
    for (const auto& word : words)
      if (!pset.count(word)) {
        r.witness = "reduced word " + to_string(word) + " is not a path";
        return r;
      }
  }
  return r;
}

}  // namespace minuscule
