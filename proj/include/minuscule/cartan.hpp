#pragma once

#include "minuscule/core.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace minuscule {

enum class CartanType { A, B, C, D, E6, E7 };

inline std::string type_name(CartanType t) {
  switch (t) {
    case CartanType::A: return "A";
    case CartanType::B: return "B";
    case CartanType::C: return "C";
    case CartanType::D: return "D";
    case CartanType::E6: return "E6";
    case CartanType::E7: return "E7";
  }
  return "?";
}

/// Accepts "A".."D", "E6", "E7" and also "E" (rank then decides 6 or 7).
inline CartanType parse_type(const std::string& s, int rank = 0) {
  if (s == "A") return CartanType::A;
  if (s == "B") return CartanType::B;
  if (s == "C") return CartanType::C;
  if (s == "D") return CartanType::D;
  if (s == "E6" || (s == "E" && rank == 6)) return CartanType::E6;
  if (s == "E7" || (s == "E" && rank == 7)) return CartanType::E7;
  throw Error("unknown Cartan type '" + s + "'");
}

using IntMatrix = std::vector<std::vector<int>>;

/// Finite-type Cartan datum with a fixed node labeling:
///   A_n  path 1-2-...-n
///   B_n  node 1 is the short simple root (a_12 = -2), path 1-2-...-n
///   C_n  node 1 is the long simple root (a_21 = -2), minuscule node n
///   D_n  fork nodes 1 and 2 both joined to 3, then 3-4-...-n
///   E6   1-3-4-5-6 with 2 joined to 4; E7 likewise with tail ...-6-7
class CartanDatum {
 public:
  CartanDatum(CartanType type, int rank, IntMatrix matrix, std::vector<int> symmetrizers,
              std::set<int> minuscule_nodes)
      : type_(type),
        rank_(rank),
        matrix_(std::move(matrix)),
        d_(std::move(symmetrizers)),
        minuscule_(std::move(minuscule_nodes)) {}

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const {
    if (type_ == CartanType::E6 || type_ == CartanType::E7) return type_name(type_);
    return type_name(type_) + std::to_string(rank_);
  }

  const IntMatrix& matrix() const { return matrix_; }
  /// a_{ij} = <h_i, alpha_j>, 1-based.
  int a(int i, int j) const { return matrix_.at(index(i)).at(index(j)); }
  const std::vector<int>& symmetrizers() const { return d_; }
  int d(int i) const { return d_.at(index(i)); }
  const std::set<int>& minuscule_nodes() const { return minuscule_; }
  bool is_minuscule_node(int i) const { return minuscule_.count(i) != 0; }
  bool simply_laced() const {
    return type_ != CartanType::B && type_ != CartanType::C;
  }

  /// (alpha_i, alpha_j) = d_i a_{ij}.
  int root_pairing(int i, int j) const { return d(i) * a(i, j); }

  void check_node(int i) const {
    if (i < 1 || i > rank_)
      throw Error("node " + std::to_string(i) + " out of range 1.." + std::to_string(rank_) +
                  " for " + label());
  }

  friend bool operator==(const CartanDatum& x, const CartanDatum& y) {
    return x.type_ == y.type_ && x.rank_ == y.rank_ && x.matrix_ == y.matrix_ && x.d_ == y.d_ &&
           x.minuscule_ == y.minuscule_;
  }

 private:
  std::size_t index(int i) const {
    check_node(i);
    return static_cast<std::size_t>(i - 1);
  }

  CartanType type_;
  int rank_;
  IntMatrix matrix_;
  std::vector<int> d_;
  std::set<int> minuscule_;
};

namespace detail {

inline void join_nodes(IntMatrix& m, int i, int j) {
  m[i - 1][j - 1] = -1;
  m[j - 1][i - 1] = -1;
}

/// Smallest positive integers d with diag(d) A symmetric (A indecomposable).
inline std::vector<int> smallest_symmetrizers(const IntMatrix& m) {
  const auto n = m.size();
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || m[i][j] == 0 || d[j] != Rational(0)) continue;
      d[j] = d[i] * Rational(m[i][j], m[j][i]);
      stack.push_back(j);
    }
  }
  std::int64_t lcm_den = 1;
  for (const auto& x : d) {
    if (x == Rational(0)) throw Error("Cartan matrix is decomposable");
    lcm_den = std::lcm(lcm_den, x.denominator());
  }
  std::vector<int> out;
  std::int64_t g = 0;
  for (const auto& x : d) {
    auto v = (x * lcm_den).numerator();
    out.push_back(static_cast<int>(v));
    g = std::gcd(g, v);
  }
  for (auto& v : out) v = static_cast<int>(v / g);
  return out;
}

}  // namespace detail

inline CartanDatum make_datum(CartanType type, int rank) {
  auto reject = [&](const char* why) {
    throw Error("invalid rank " + std::to_string(rank) + " for type " + type_name(type) + ": " + why);
  };
  switch (type) {
    case CartanType::A: if (rank < 1) reject("A_n needs n >= 1"); break;
    case CartanType::B:
    case CartanType::C: if (rank < 2) reject("B_n and C_n need n >= 2"); break;
    case CartanType::D: if (rank < 3) reject("D_n needs n >= 3"); break;
    case CartanType::E6: if (rank != 6) reject("E6 has rank 6"); break;
    case CartanType::E7: if (rank != 7) reject("E7 has rank 7"); break;
  }

  const int n = rank;
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  std::set<int> minuscule;

  switch (type) {
    case CartanType::A:
      for (int i = 1; i < n; ++i) detail::join_nodes(m, i, i + 1);
      for (int i = 1; i <= n; ++i) minuscule.insert(i);
      break;
    case CartanType::B:
      for (int i = 1; i < n; ++i) detail::join_nodes(m, i, i + 1);
      m[0][1] = -2;
      minuscule = {1};
      break;
    case CartanType::C:
      for (int i = 1; i < n; ++i) detail::join_nodes(m, i, i + 1);
      m[1][0] = -2;
      minuscule = {n};
      break;
    case CartanType::D:
      detail::join_nodes(m, 1, 3);
      detail::join_nodes(m, 2, 3);
      for (int i = 3; i < n; ++i) detail::join_nodes(m, i, i + 1);
      minuscule = {1, 2, n};
      break;
    case CartanType::E6:
    case CartanType::E7:
      detail::join_nodes(m, 1, 3);
      detail::join_nodes(m, 2, 4);
      for (int i = 3; i < n; ++i) detail::join_nodes(m, i, i + 1);
      minuscule = type == CartanType::E6 ? std::set<int>{1, 6} : std::set<int>{7};
      break;
  }
  auto d = detail::smallest_symmetrizers(m);
  return CartanDatum(type, rank, std::move(m), std::move(d), std::move(minuscule));
}

inline CartanDatum make_datum(const std::string& type, int rank) {
  return make_datum(parse_type(type, rank), rank);
}

inline Weight zero_weight(const CartanDatum& datum) {
  return Weight{std::vector<int>(static_cast<std::size_t>(datum.rank()), 0)};
}

inline Weight fundamental_weight(const CartanDatum& datum, int i) {
  datum.check_node(i);
  Weight w = zero_weight(datum);
  w.coords[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}

/// rho = sum of the fundamental weights.
inline Weight rho(const CartanDatum& datum) {
  return Weight{std::vector<int>(static_cast<std::size_t>(datum.rank()), 1)};
}

/// alpha_j in fundamental coordinates: the j-th column of the Cartan matrix.
inline Weight simple_root(const CartanDatum& datum, int j) {
  datum.check_node(j);
  Weight w = zero_weight(datum);
  for (int i = 1; i <= datum.rank(); ++i) w.coords[static_cast<std::size_t>(i - 1)] = datum.a(i, j);
  return w;
}

/// sum_j x_j alpha_j in fundamental coordinates.
inline Weight weight_of(const CartanDatum& datum, const RootVector& x) {
  Weight w = zero_weight(datum);
  for (int j = 1; j <= datum.rank(); ++j) {
    const int c = x.coeffs.at(static_cast<std::size_t>(j - 1));
    if (c != 0) w = w + c * simple_root(datum, j);
  }
  return w;
}

/// Symmetric bilinear form on the root lattice, (alpha_i, alpha_j) = d_i a_ij.
inline std::int64_t pairing(const CartanDatum& datum, const RootVector& x, const RootVector& y) {
  std::int64_t s = 0;
  for (int i = 1; i <= datum.rank(); ++i)
    for (int j = 1; j <= datum.rank(); ++j)
      s += static_cast<std::int64_t>(x.coeffs.at(i - 1)) * y.coeffs.at(j - 1) * datum.root_pairing(i, j);
  return s;
}

inline RootVector simple_root_vector(const CartanDatum& datum, int j) {
  datum.check_node(j);
  RootVector r{std::vector<int>(static_cast<std::size_t>(datum.rank()), 0)};
  r.coeffs[static_cast<std::size_t>(j - 1)] = 1;
  return r;
}

/// Solves A x = coords exactly. Empty when the weight is not in the root
/// lattice.
inline std::optional<RootVector> root_coordinates(const CartanDatum& datum, const Weight& w) {
  const auto n = static_cast<std::size_t>(datum.rank());
  if (w.coords.size() != n) throw Error("weight rank does not match datum");
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = datum.matrix()[i][j];
    aug[i][n] = w.coords[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug[pivot][col] == Rational(0)) ++pivot;
    if (pivot == n) throw Error("singular Cartan matrix");
    std::swap(aug[pivot], aug[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == Rational(0)) continue;
      const Rational f = aug[r][col] / aug[col][col];
      for (std::size_t c = col; c <= n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  RootVector x{std::vector<int>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const Rational v = aug[i][n] / aug[i][i];
    if (v.denominator() != 1) return std::nullopt;
    x.coeffs[i] = static_cast<int>(v.numerator());
  }
  return x;
}

/// True when diag(d) A is symmetric.
inline bool symmetrized_matrix_is_symmetric(const CartanDatum& datum) {
  for (int i = 1; i <= datum.rank(); ++i)
    for (int j = 1; j <= datum.rank(); ++j)
      if (datum.root_pairing(i, j) != datum.root_pairing(j, i)) return false;
  return true;
}

}  // namespace minuscule
