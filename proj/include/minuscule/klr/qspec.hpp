#pragma once

#include "minuscule/cartan.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace minuscule::klr {

/// One monomial t u^p v^q of Q_{i,j}(u, v).
struct QTerm {
  int p = 0;
  int q = 0;
  Rational coef;
};

/// Exponent pairs (p, q) >= 0 with (a_i, a_i) p + (a_j, a_j) q = -2 (a_i, a_j).
inline std::vector<std::pair<int, int>> admissible_exponents(const CartanDatum& datum, int i, int j) {
  std::vector<std::pair<int, int>> out;
  if (i == j) return out;
  const int ii = datum.root_pairing(i, i);
  const int jj = datum.root_pairing(j, j);
  const int rhs = -2 * datum.root_pairing(i, j);
  for (int p = 0; p * ii <= rhs; ++p)
    if ((rhs - p * ii) % jj == 0) out.emplace_back(p, (rhs - p * ii) / jj);
  return out;
}

/// The polynomials Q_{i,j} of a quiver Hecke algebra: Q_{i,i} = 0,
/// Q_{i,j}(u, v) = Q_{j,i}(v, u), Q_{i,j} = 1 when (a_i, a_j) = 0 and
/// nonzero coefficients on u^{-a_ij} and v^{-a_ji}.
class QSpec {
 public:
  /// Coefficient generator, consulted for i < j only; the (0, 0) term of an
  /// orthogonal pair is pinned to 1.
  using Generator = std::function<Rational(int i, int j, int p, int q)>;

  QSpec(CartanDatum datum, std::string name, const Generator& gen) : datum_(std::move(datum)), name_(std::move(name)) {
    const int n = datum_.rank();
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        std::vector<QTerm> ij;
        std::vector<QTerm> ji;
        for (auto [p, q] : admissible_exponents(datum_, i, j)) {
          const Rational t = datum_.root_pairing(i, j) == 0 ? Rational(1) : gen(i, j, p, q);
          if (t == Rational(0)) continue;
          ij.push_back({p, q, t});
          ji.push_back({q, p, t});
        }
        terms_[{i, j}] = std::move(ij);
        terms_[{j, i}] = std::move(ji);
      }
  }

  /// a_{i,j} = 1 on the leading monomials, -1 on the trailing ones.
  static QSpec normalized(const CartanDatum& datum) {
    return QSpec(datum, "normalized", [&datum](int i, int j, int p, int q) {
      if (p == -datum.a(i, j) && q == 0) return Rational(1);
      if (p == 0 && q == -datum.a(j, i)) return Rational(-1);
      return Rational(0);
    });
  }

  const CartanDatum& datum() const { return datum_; }
  const std::string& name() const { return name_; }

  /// Terms of Q_{i,j}; empty (the zero polynomial) when i == j.
  const std::vector<QTerm>& polynomial(int i, int j) const {
    static const std::vector<QTerm> zero;
    if (i == j) return zero;
    return terms_.at({i, j});
  }

  Rational coefficient(int i, int j, int p, int q) const {
    for (const auto& t : polynomial(i, j))
      if (t.p == p && t.q == q) return t.coef;
    return Rational(0);
  }

  /// Verifies the symmetry, leading-coefficient and orthogonal-pair rules.
  CheckResult validate() const {
    CheckResult r{"qspec"};
    const int n = datum_.rank();
    for (int i = 1; i <= n && r.passed(); ++i)
      for (int j = 1; j <= n && r.passed(); ++j) {
        if (i == j) continue;
        ++r.checked;
        for (const auto& t : polynomial(i, j))
          if (coefficient(j, i, t.q, t.p) != t.coef) fail(r, "t_{i,j;p,q} != t_{j,i;q,p}", i, j);
        if (coefficient(i, j, -datum_.a(i, j), 0) == Rational(0)) fail(r, "vanishing leading coefficient", i, j);
        if (datum_.root_pairing(i, j) == 0 &&
            (polynomial(i, j).size() != 1 || coefficient(i, j, 0, 0) != Rational(1)))
          fail(r, "orthogonal pair with Q != 1", i, j);
      }
    return r;
  }

 private:
  static void fail(CheckResult& r, const std::string& what, int i, int j) {
    r.status = Status::fail;
    r.witness = what + " at (i,j) = (" + std::to_string(i) + "," + std::to_string(j) + ")";
  }

  CartanDatum datum_;
  std::string name_;
  std::map<std::pair<int, int>, std::vector<QTerm>> terms_;
};

/// Three coefficient choices used to confirm that module checks do not
/// depend on the parameters: normalized (1, -1), scaled (2, 3), and a
/// node-dependent rational family.
inline std::vector<QSpec> standard_qspecs(const CartanDatum& datum) {
  std::vector<QSpec> out{QSpec::normalized(datum)};
  out.emplace_back(datum, "scaled", [&datum](int i, int j, int p, int q) {
    if (p == -datum.a(i, j) && q == 0) return Rational(2);
    if (p == 0 && q == -datum.a(j, i)) return Rational(3);
    return Rational(5);
  });
  out.emplace_back(datum, "mixed", [&datum](int i, int j, int p, int q) {
    if (p == -datum.a(i, j) && q == 0) return Rational(i + 2 * j, 3);
    if (p == 0 && q == -datum.a(j, i)) return Rational(-7, i + j);
    return Rational(5, 2);
  });
  return out;
}

}  // namespace minuscule::klr
