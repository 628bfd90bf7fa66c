#pragma once

#include "minuscule/cartan.hpp"
#include "minuscule/weyl.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace minuscule {

/// Box (row, column) of a shifted diagram, 1-based, English convention.
struct Box {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Box&, const Box&) = default;
  friend bool operator==(const Box&, const Box&) = default;
};

inline std::string to_string(const Box& b) { return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")"; }

/// res(i, j) = j - i + 1.
inline int residue(const Box& b) {
  if (b.row > b.col) throw Error("box " + to_string(b) + " lies below the diagonal of a shifted diagram");
  return b.col - b.row + 1;
}

/// Type D residue: diagonal boxes alternate 1 (odd rows) and 2 (even rows),
/// off-diagonal boxes get j - i + 2.
inline int residue_D(const Box& b) {
  if (b.row > b.col) throw Error("box " + to_string(b) + " lies below the diagonal of a shifted diagram");
  if (b.row == b.col) return b.row % 2 == 1 ? 1 : 2;
  return b.col - b.row + 2;
}

using ResidueFn = int (*)(const Box&);

/// Strictly decreasing sequence of positive parts, drawn as a shifted
/// diagram: row i occupies columns i .. i + parts[i-1] - 1.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] <= 0) throw Error("strict partition parts must be positive");
      if (k > 0 && parts_[k] >= parts_[k - 1]) throw Error("strict partition parts must strictly decrease");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int row) const { return row >= 1 && row <= length() ? parts_[row - 1] : 0; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  bool empty() const { return parts_.empty(); }

  bool contains(const Box& b) const {
    return b.row >= 1 && b.row <= length() && b.row <= b.col && b.col <= part(b.row) + b.row - 1;
  }

  /// Boxes in row-major order.
  std::vector<Box> boxes() const {
    std::vector<Box> out;
    for (int i = 1; i <= length(); ++i)
      for (int j = i; j < i + part(i); ++j) out.push_back({i, j});
    return out;
  }

  std::vector<Box> addable_boxes() const {
    std::vector<Box> out;
    for (int r = 1; r <= length() + 1; ++r) {
      const int grown = part(r) + 1;
      if (r == 1 || grown < part(r - 1)) out.push_back({r, r + part(r)});
    }
    return out;
  }

  std::vector<Box> removable_boxes() const {
    std::vector<Box> out;
    for (int r = 1; r <= length(); ++r)
      if (r == length() || part(r) - 1 > part(r + 1)) out.push_back({r, r + part(r) - 1});
    return out;
  }

  /// lambda with the addable box b added.
  StrictPartition add(const Box& b) const {
    for (const auto& a : addable_boxes())
      if (a == b) {
        auto p = parts_;
        if (b.row > length()) p.push_back(1);
        else ++p[b.row - 1];
        return StrictPartition(std::move(p));
      }
    throw Error("box " + to_string(b) + " is not addable to " + str());
  }

  /// lambda with the removable box b removed.
  StrictPartition remove(const Box& b) const {
    for (const auto& a : removable_boxes())
      if (a == b) {
        auto p = parts_;
        if (--p[b.row - 1] == 0) p.pop_back();
        return StrictPartition(std::move(p));
      }
    throw Error("box " + to_string(b) + " is not removable from " + str());
  }

  std::string str() const { return "(" + join(parts_) + ")"; }

  friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;
  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// Strict partitions with largest part <= n and |lambda| = m, in
/// lexicographic order of their parts.
inline std::vector<StrictPartition> enumerate_strict_partitions(int n, int m) {
  if (n < 0 || m < 0) throw Error("enumerate_strict_partitions needs n, m >= 0");
  std::vector<StrictPartition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int bound) -> void {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = 1; p <= std::min(bound, remaining); ++p) {
      parts.push_back(p);
      self(self, remaining - p, p - 1);
      parts.pop_back();
    }
  };
  rec(rec, m, n);
  std::sort(out.begin(), out.end());
  return out;
}

/// Par_n: every strict partition with largest part <= n, ordered by size
/// and then lexicographically.
inline std::vector<StrictPartition> strict_partitions(int n) {
  std::vector<StrictPartition> out;
  for (int m = 0; m <= n * (n + 1) / 2; ++m) {
    auto level = enumerate_strict_partitions(n, m);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Standard filling of a shifted diagram: rows and columns increase.
class StandardTableau {
 public:
  StandardTableau(StrictPartition shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.length()) throw Error("tableau rows do not match its shape");
    for (int i = 1; i <= shape_.length(); ++i)
      if (static_cast<int>(rows_[i - 1].size()) != shape_.part(i)) throw Error("tableau row length mismatch");
  }

  const StrictPartition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  int entry(const Box& b) const { return rows_.at(b.row - 1).at(b.col - b.row); }

  /// Box holding k, for k = 1..size().
  Box box_of(int k) const {
    for (int i = 1; i <= shape_.length(); ++i)
      for (int j = 0; j < shape_.part(i); ++j)
        if (rows_[i - 1][j] == k) return {i, i + j};
    throw Error("entry " + std::to_string(k) + " not present");
  }

  bool is_standard() const {
    const int n = size();
    std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
    for (const auto& b : shape_.boxes()) {
      const int v = entry(b);
      if (v < 1 || v > n || used[v]) return false;
      used[v] = true;
      const Box right{b.row, b.col + 1};
      const Box down{b.row + 1, b.col};
      if (shape_.contains(right) && entry(right) <= v) return false;
      if (shape_.contains(down) && entry(down) <= v) return false;
    }
    return true;
  }

  /// s_k T: exchange the entries k and k+1 (the result may be non-standard).
  StandardTableau swap_entries(int k) const {
    StandardTableau t = *this;
    for (auto& row : t.rows_)
      for (auto& v : row) {
        if (v == k) v = k + 1;
        else if (v == k + 1) v = k;
      }
    return t;
  }

  /// T with its largest entry removed; the shape loses that removable box.
  StandardTableau without_largest() const {
    const Box b = box_of(size());
    auto rows = rows_;
    rows[b.row - 1].pop_back();
    if (rows[b.row - 1].empty()) rows.pop_back();
    return StandardTableau(shape_.remove(b), std::move(rows));
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) s += (i ? "/" : "") + join(rows_[i]);
    return "[" + s + "]";
  }

  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;
  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  StrictPartition shape_;
  std::vector<std::vector<int>> rows_;
};

/// ST(lambda), by backtracking: entry k goes into an addable corner of the
/// shape filled by 1..k-1. Order is lexicographic on the sequence of boxes
/// chosen for 1, 2, ..., N.
inline std::vector<StandardTableau> standard_tableaux(const StrictPartition& lambda) {
  const int n = lambda.size();
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows;
  auto rec = [&](auto&& self, const StrictPartition& filled, int k) -> void {
    if (k > n) {
      out.emplace_back(lambda, rows);
      return;
    }
    for (const auto& b : filled.addable_boxes()) {
      if (!lambda.contains(b)) continue;
      if (b.row > static_cast<int>(rows.size())) rows.emplace_back();
      rows[b.row - 1].push_back(k);
      self(self, filled.add(b), k + 1);
      rows[b.row - 1].pop_back();
      if (rows.back().empty()) rows.pop_back();
    }
  };
  rec(rec, StrictPartition{}, 1);
  return out;
}

/// |ST(lambda)| via the removal-of-the-largest-entry recursion.
inline std::uint64_t tableau_count(const StrictPartition& lambda) {
  static thread_local std::map<StrictPartition, std::uint64_t> memo;
  if (lambda.empty()) return 1;
  if (auto it = memo.find(lambda); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (const auto& b : lambda.removable_boxes()) total += tableau_count(lambda.remove(b));
  memo.emplace(lambda, total);
  return total;
}

/// The initial tableau T_0: 1..N filled left to right, top to bottom.
inline StandardTableau initial_tableau(const StrictPartition& lambda) {
  std::vector<std::vector<int>> rows;
  int k = 1;
  for (int i = 1; i <= lambda.length(); ++i) {
    rows.emplace_back();
    for (int j = 0; j < lambda.part(i); ++j) rows.back().push_back(k++);
  }
  return StandardTableau(lambda, std::move(rows));
}

/// (res(box of N), ..., res(box of 1)): the box holding the largest entry
/// comes first.
inline Sequence residue_sequence(const StandardTableau& t, ResidueFn res = residue) {
  Sequence out;
  for (int k = t.size(); k >= 1; --k) out.push_back(res(t.box_of(k)));
  return out;
}

/// wt(lambda) = Lambda_1 - sum of alpha_res(b) over the boxes of lambda,
/// in type B_n. For n = 1 the datum is A_1 (B_1 and A_1 coincide).
inline Weight wt(const CartanDatum& datum_B, const StrictPartition& lambda) {
  const bool b1 = datum_B.type() == CartanType::A && datum_B.rank() == 1;
  if (datum_B.type() != CartanType::B && !b1) throw Error("wt needs a type B datum");
  if (lambda.largest() > datum_B.rank())
    throw Error("partition " + lambda.str() + " has a part larger than n = " + std::to_string(datum_B.rank()));
  Weight w = fundamental_weight(datum_B, 1);
  for (const auto& b : lambda.boxes()) w = w - simple_root(datum_B, residue(b));
  return w;
}

/// wt_D(lambda) in type D_{n+1}, lambda in Par_n.
inline Weight wt_D(const CartanDatum& datum_D, const StrictPartition& lambda) {
  if (datum_D.type() != CartanType::D) throw Error("wt_D needs a type D datum");
  if (lambda.largest() > datum_D.rank() - 1)
    throw Error("partition " + lambda.str() + " has a part larger than n = " + std::to_string(datum_D.rank() - 1));
  Weight w = fundamental_weight(datum_D, 1);
  for (const auto& b : lambda.boxes()) w = w - simple_root(datum_D, residue_D(b));
  return w;
}

/// Datum of type B_n used for the tableau side; n = 1 falls back to A_1.
inline CartanDatum datum_for_partitions(int n) {
  return n == 1 ? make_datum(CartanType::A, 1) : make_datum(CartanType::B, n);
}

enum class Direction { lower, raise };

/// Crystal operators on Par_n: f_i adds the addable box of residue i,
/// e_i removes the removable box of residue i.
inline std::optional<StrictPartition> partition_crystal_step(int n, const StrictPartition& lambda, int i,
                                                             Direction direction) {
  if (lambda.largest() > n) throw Error("partition " + lambda.str() + " is not in Par_" + std::to_string(n));
  const auto candidates = direction == Direction::lower ? lambda.addable_boxes() : lambda.removable_boxes();
  std::optional<StrictPartition> out;
  for (const auto& b : candidates) {
    if (residue(b) != i) continue;
    if (out) throw std::logic_error("two boxes of residue " + std::to_string(i) + " at " + lambda.str());
    auto next = direction == Direction::lower ? lambda.add(b) : lambda.remove(b);
    if (next.largest() > n) continue;
    out = std::move(next);
  }
  return out;
}

/// lambda -> wt(lambda) is injective on Par_n with image the orbit W Lambda_1.
inline CheckResult check_partition_bijection(int n) {
  if (n < 1) throw Error("check_partition_bijection needs n >= 1");
  CheckResult r{"partition_bijection"};
  const auto datum = datum_for_partitions(n);
  const auto target = orbit(datum, fundamental_weight(datum, 1));
  std::map<Weight, StrictPartition> image;
  for (const auto& lambda : strict_partitions(n)) {
    ++r.checked;
    auto w = wt(datum, lambda);
    auto [it, fresh] = image.emplace(w, lambda);
    if (!fresh) {
      r.status = Status::fail;
      r.witness = lambda.str() + " and " + it->second.str() + " share weight " + to_string(w);
      return r;
    }
  }
  std::set<Weight> got;
  for (const auto& [w, lambda] : image) got.insert(w);
  if (got != std::set<Weight>(target.begin(), target.end())) {
    r.status = Status::fail;
    r.witness = std::to_string(got.size()) + " partition weights vs " + std::to_string(target.size()) +
                " orbit weights";
  }
  return r;
}

/// lambda_b for a vertex weight of B(Lambda_1) in type B_n, by walking the
/// partition crystal.
inline std::map<Weight, StrictPartition> partitions_by_weight(int n) {
  const auto datum = datum_for_partitions(n);
  std::map<Weight, StrictPartition> out;
  for (const auto& lambda : strict_partitions(n)) out.emplace(wt(datum, lambda), lambda);
  return out;
}

/// Shifted diagram as text; `fill` renders the content of one box.
template <typename Fill>
std::string render_shifted(const StrictPartition& lambda, Fill&& fill, int width = 3) {
  std::string out;
  for (int i = 1; i <= lambda.length(); ++i) {
    out.append(static_cast<std::size_t>((i - 1) * width), ' ');
    for (int j = i; j < i + lambda.part(i); ++j) {
      std::string cell = fill(Box{i, j});
      if (static_cast<int>(cell.size()) < width) cell.insert(0, static_cast<std::size_t>(width) - cell.size(), ' ');
      out += cell;
    }
    out += '\n';
  }
  return out;
}

inline std::string render(const StrictPartition& lambda) {
  return render_shifted(lambda, [](const Box&) { return std::string("[]"); });
}

inline std::string render(const StandardTableau& t) {
  return render_shifted(t.shape(), [&](const Box& b) { return std::to_string(t.entry(b)); });
}

}  // namespace minuscule
