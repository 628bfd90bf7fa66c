#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minuscule {

/// Exact sparse matrix keeping both a row-major and a column-major index, so
/// that products against very sparse factors (idempotents, partial
/// permutations) cost O(nnz of the smaller side).
template <typename Scalar>
class SparseMatrix {
 public:
  using Index = std::size_t;
  using Key = std::pair<Index, Index>;

  struct Triplet {
    Index row;
    Index col;
    Scalar value;
  };

  SparseMatrix() = default;
  SparseMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {}

  static SparseMatrix identity(Index n) {
    SparseMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m.set(i, i, Scalar(1));
    return m;
  }

  static SparseMatrix unit(Index rows, Index cols, Index r, Index c) {
    SparseMatrix m(rows, cols);
    m.set(r, c, Scalar(1));
    return m;
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  std::size_t nnz() const { return by_row_.size(); }
  bool is_zero() const { return by_row_.empty(); }

  Scalar at(Index r, Index c) const {
    auto it = by_row_.find({r, c});
    return it == by_row_.end() ? Scalar(0) : it->second;
  }

  void set(Index r, Index c, const Scalar& v) {
    check_bounds(r, c);
    if (v == Scalar(0)) {
      by_row_.erase({r, c});
      by_col_.erase({c, r});
    } else {
      by_row_[{r, c}] = v;
      by_col_[{c, r}] = v;
    }
  }

  void add(Index r, Index c, const Scalar& v) { set(r, c, at(r, c) + v); }

  /// Visits the nonzeros of row `r` in column order.
  template <typename F>
  void for_row(Index r, F&& f) const {
    for (auto it = by_row_.lower_bound({r, 0}); it != by_row_.end() && it->first.first == r; ++it)
      f(it->first.second, it->second);
  }

  /// Visits the nonzeros of column `c` in row order.
  template <typename F>
  void for_col(Index c, F&& f) const {
    for (auto it = by_col_.lower_bound({c, 0}); it != by_col_.end() && it->first.first == c; ++it)
      f(it->first.second, it->second);
  }

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& [key, v] : by_row_) f(key.first, key.second, v);
  }

  std::vector<Triplet> triplets() const {
    std::vector<Triplet> out;
    out.reserve(nnz());
    for (const auto& [key, v] : by_row_) out.push_back({key.first, key.second, v});
    return out;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    t.by_row_ = by_col_;
    t.by_col_ = by_row_;
    return t;
  }

  template <typename Other>
  SparseMatrix<Other> cast() const {
    SparseMatrix<Other> out(rows_, cols_);
    for (const auto& [key, v] : by_row_) out.set(key.first, key.second, Other(v));
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.by_row_ == b.by_row_;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    a.check_same_shape(b);
    SparseMatrix out = a;
    for (const auto& [key, v] : b.by_row_) out.add(key.first, key.second, v);
    return out;
  }

  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    a.check_same_shape(b);
    SparseMatrix out = a;
    for (const auto& [key, v] : b.by_row_) out.add(key.first, key.second, -v);
    return out;
  }

  friend SparseMatrix operator*(const Scalar& s, const SparseMatrix& a) {
    SparseMatrix out(a.rows_, a.cols_);
    if (s == Scalar(0)) return out;
    for (const auto& [key, v] : a.by_row_) out.set(key.first, key.second, s * v);
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("SparseMatrix: inner dimensions differ");
    std::map<Key, Scalar> acc;
    if (b.nnz() <= a.nnz()) {
      for (const auto& [key, bv] : b.by_row_) {
        const auto [k, j] = key;
        a.for_col(k, [&](Index i, const Scalar& av) { acc[{i, j}] += av * bv; });
      }
    } else {
      for (const auto& [key, av] : a.by_row_) {
        const auto [i, k] = key;
        b.for_row(k, [&](Index j, const Scalar& bv) { acc[{i, j}] += av * bv; });
      }
    }
    SparseMatrix out(a.rows_, b.cols_);
    for (const auto& [key, v] : acc)
      if (v != Scalar(0)) out.set(key.first, key.second, v);
    return out;
  }

  /// Sparse triplet text: a `rows cols nnz` header followed by one
  /// `row col value` line per nonzero (0-based, row-major).
  std::string to_triplet_text() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << ' ' << nnz() << '\n';
    for (const auto& [key, v] : by_row_) os << key.first << ' ' << key.second << ' ' << v << '\n';
    return os.str();
  }

 private:
  void check_bounds(Index r, Index c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix: index out of range");
  }
  void check_same_shape(const SparseMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("SparseMatrix: shapes differ");
  }

  Index rows_ = 0;
  Index cols_ = 0;
  std::map<Key, Scalar> by_row_;
  std::map<Key, Scalar> by_col_;
};

}  // namespace minuscule
