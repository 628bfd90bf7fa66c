#pragma once

#include "minuscule/klr/module.hpp"
#include "minuscule/klr/qspec.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace minuscule::klr {

using RationalOp = SparseMatrix<Rational>;

/// Outcome of the defining-relation suite: one entry per relation family.
struct RelationReport {
  std::string qspec;
  std::vector<CheckResult> families;

  bool passed() const {
    for (const auto& f : families)
      if (f.failed()) return false;
    return true;
  }
  const CheckResult& family(const std::string& name) const {
    for (const auto& f : families)
      if (f.name == name) return f;
    throw Error("no relation family '" + name + "'");
  }
};

inline const std::vector<std::string>& relation_family_names() {
  static const std::vector<std::string> names{"idempotent", "x_commute", "tau_e",   "tau_x",
                                              "quadratic",  "braid",     "grading"};
  return names;
}

namespace detail {

/// The module's operators over the rationals, so Q coefficients can enter.
struct RationalOps {
  std::size_t dim = 0;
  std::map<IndexSequence, RationalOp> e;
  std::vector<RationalOp> x;
  std::vector<RationalOp> tau;

  explicit RationalOps(const HomogeneousModule& m) : dim(m.dimension()) {
    for (const auto& [nu, mat] : m.idempotents) e.emplace(nu, mat.cast<Rational>());
    for (const auto& mat : m.dots) x.push_back(mat.cast<Rational>());
    for (const auto& mat : m.crossings) tau.push_back(mat.cast<Rational>());
  }

  RationalOp idem(const IndexSequence& nu) const {
    auto it = e.find(nu);
    return it == e.end() ? RationalOp(dim, dim) : it->second;
  }
  const RationalOp& X(int k) const { return x.at(static_cast<std::size_t>(k - 1)); }
  const RationalOp& T(int k) const { return tau.at(static_cast<std::size_t>(k - 1)); }
};

inline RationalOp left_power(const RationalOp& a, int power, RationalOp m) {
  for (int k = 0; k < power; ++k) m = a * m;
  return m;
}

/// Q(U, V) M for commuting U, V, evaluated right to left.
inline RationalOp apply_polynomial(const std::vector<QTerm>& terms, const RationalOp& u, const RationalOp& v,
                                   const RationalOp& m) {
  RationalOp out(m.rows(), m.cols());
  for (const auto& t : terms) out = out + t.coef * left_power(u, t.p, left_power(v, t.q, m));
  return out;
}

/// (Q(U, V) - Q(W, V)) / (U - W) applied to M, using
/// (u^p - w^p)/(u - w) = sum_{a+b=p-1} u^a w^b.
inline RationalOp apply_divided_difference(const std::vector<QTerm>& terms, const RationalOp& u, const RationalOp& w,
                                           const RationalOp& v, const RationalOp& m) {
  RationalOp out(m.rows(), m.cols());
  for (const auto& t : terms) {
    if (t.p == 0) continue;
    const RationalOp vm = left_power(v, t.q, m);
    for (int a = 0; a < t.p; ++a) out = out + t.coef * left_power(u, a, left_power(w, t.p - 1 - a, vm));
  }
  return out;
}

inline int letter(const IndexSequence& nu, int k) { return nu.at(static_cast<std::size_t>(k - 1)); }

struct FamilyCheck {
  CheckResult result;
  explicit FamilyCheck(std::string name) : result{std::move(name)} {}

  /// Records one comparison; returns false once the family has failed.
  bool expect(bool ok, const std::function<std::string()>& witness) {
    if (result.failed()) return false;
    ++result.checked;
    if (!ok) {
      result.status = Status::fail;
      result.witness = witness();
      return false;
    }
    return true;
  }
  bool open() const { return !result.failed(); }
};

}  // namespace detail

/// Verifies every defining relation of the quiver Hecke algebra as an exact
/// matrix identity on the module, quantified over all positions and all
/// occurring index sequences (e(nu) = 0 for the others).
inline RelationReport check_klr_relations(const HomogeneousModule& m, const QSpec& qspec) {
  using detail::letter;
  const auto& datum = m.datum;
  if (!(qspec.datum() == datum)) throw Error("QSpec datum does not match the module datum");
  const detail::RationalOps ops(m);
  const auto d = ops.dim;
  const int len = m.height;
  const RationalOp zero(d, d);
  const RationalOp id = RationalOp::identity(d);
  std::vector<IndexSequence> occurring;
  for (const auto& [nu, mat] : ops.e) occurring.push_back(nu);

  RelationReport report{qspec.name()};

  {
    detail::FamilyCheck c("idempotent");
    const Weight top = fundamental_weight(datum, m.node);
    for (const auto& nu : occurring) {
      Weight w = top;
      for (int i : nu) w = w - simple_root(datum, i);
      if (!c.expect(static_cast<int>(nu.size()) == len && w == m.weight,
                    [&] { return "e" + to_string(nu) + " does not lie in I^beta"; }))
        break;
    }
    RationalOp sum(d, d);
    for (std::size_t a = 0; a < occurring.size() && c.open(); ++a) {
      const auto& ea = ops.e.at(occurring[a]);
      sum = sum + ea;
      for (std::size_t b = 0; b < occurring.size(); ++b) {
        const auto prod = ea * ops.e.at(occurring[b]);
        if (!c.expect(prod == (a == b ? ea : zero), [&] {
              return "e" + to_string(occurring[a]) + " e" + to_string(occurring[b]) + " != delta e";
            }))
          break;
      }
    }
    c.expect(!c.open() || sum == id, [] { return std::string("sum of e(nu) is not the identity"); });
    report.families.push_back(c.result);
  }

  {
    detail::FamilyCheck c("x_commute");
    for (int k = 1; k <= len && c.open(); ++k)
      for (int l = k + 1; l <= len; ++l)
        if (!c.expect(ops.X(k) * ops.X(l) == ops.X(l) * ops.X(k), [&] {
              return "x_" + std::to_string(k) + " x_" + std::to_string(l) + " != x_" + std::to_string(l) + " x_" +
                     std::to_string(k);
            }))
          break;
    for (int k = 1; k <= len && c.open(); ++k)
      for (const auto& nu : occurring) {
        const auto& e = ops.e.at(nu);
        if (!c.expect(ops.X(k) * e == e * ops.X(k),
                      [&] { return "x_" + std::to_string(k) + " does not commute with e" + to_string(nu); }))
          break;
      }
    report.families.push_back(c.result);
  }

  {
    detail::FamilyCheck c("tau_e");
    for (int k = 1; k < len && c.open(); ++k) {
      std::set<IndexSequence> seqs(occurring.begin(), occurring.end());
      for (const auto& nu : occurring) seqs.insert(place_swap(nu, k));
      for (const auto& nu : seqs) {
        if (!c.expect(ops.T(k) * ops.idem(nu) == ops.idem(place_swap(nu, k)) * ops.T(k), [&] {
              return "tau_" + std::to_string(k) + " e" + to_string(nu) + " != e(s_" + std::to_string(k) + " nu) tau_" +
                     std::to_string(k);
            }))
          break;
      }
    }
    for (int k = 1; k < len && c.open(); ++k)
      for (int l = k + 2; l < len; ++l)
        if (!c.expect(ops.T(k) * ops.T(l) == ops.T(l) * ops.T(k), [&] {
              return "tau_" + std::to_string(k) + " and tau_" + std::to_string(l) + " do not commute";
            }))
          break;
    report.families.push_back(c.result);
  }

  {
    detail::FamilyCheck c("tau_x");
    for (int k = 1; k < len && c.open(); ++k)
      for (int l = 1; l <= len && c.open(); ++l) {
        const int image = l == k ? k + 1 : (l == k + 1 ? k : l);
        for (const auto& nu : occurring) {
          const auto& e = ops.e.at(nu);
          const auto lhs = ops.T(k) * (ops.X(l) * e) - ops.X(image) * (ops.T(k) * e);
          RationalOp rhs = zero;
          if (letter(nu, k) == letter(nu, k + 1)) {
            if (l == k) rhs = Rational(-1) * e;
            if (l == k + 1) rhs = e;
          }
          if (!c.expect(lhs == rhs, [&] {
                return "(tau_" + std::to_string(k) + " x_" + std::to_string(l) + " - x_" + std::to_string(image) +
                       " tau_" + std::to_string(k) + ") e" + to_string(nu) + " has the wrong value";
              }))
            break;
        }
      }
    report.families.push_back(c.result);
  }

  {
    detail::FamilyCheck c("quadratic");
    for (int k = 1; k < len && c.open(); ++k)
      for (const auto& nu : occurring) {
        const auto& e = ops.e.at(nu);
        const auto lhs = ops.T(k) * (ops.T(k) * e);
        const auto rhs =
            detail::apply_polynomial(qspec.polynomial(letter(nu, k), letter(nu, k + 1)), ops.X(k), ops.X(k + 1), e);
        if (!c.expect(lhs == rhs, [&] {
              return "tau_" + std::to_string(k) + "^2 e" + to_string(nu) + " != Q_{" + std::to_string(letter(nu, k)) +
                     "," + std::to_string(letter(nu, k + 1)) + "}(x_k, x_k+1) e(nu)";
            }))
          break;
      }
    report.families.push_back(c.result);
  }

  {
    detail::FamilyCheck c("braid");
    for (int k = 1; k + 1 < len && c.open(); ++k)
      for (const auto& nu : occurring) {
        const auto& e = ops.e.at(nu);
        const auto& t0 = ops.T(k);
        const auto& t1 = ops.T(k + 1);
        const auto lhs = t1 * (t0 * (t1 * e)) - t0 * (t1 * (t0 * e));
        RationalOp rhs = zero;
        if (letter(nu, k) == letter(nu, k + 2))
          rhs = detail::apply_divided_difference(qspec.polynomial(letter(nu, k), letter(nu, k + 1)), ops.X(k),
                                                 ops.X(k + 2), ops.X(k + 1), e);
        if (!c.expect(lhs == rhs, [&] {
              return "(tau_" + std::to_string(k + 1) + " tau_" + std::to_string(k) + " tau_" + std::to_string(k + 1) +
                     " - tau_" + std::to_string(k) + " tau_" + std::to_string(k + 1) + " tau_" + std::to_string(k) +
                     ") e" + to_string(nu) + " has the wrong value";
            }))
          break;
      }
    report.families.push_back(c.result);
  }

  {
    // Every nonzero tau_k e(nu) must carry degree -(a_{nu_k}, a_{nu_k+1}) = 0
    // and every nonzero x_k e(nu) would carry (a_{nu_k}, a_{nu_k}) > 0.
    detail::FamilyCheck c("grading");
    for (int k = 1; k < len && c.open(); ++k)
      m.tau(k).for_each([&](std::size_t, std::size_t p, std::int64_t) {
        const auto& nu = m.sequences[p];
        const int deg = -datum.root_pairing(letter(nu, k), letter(nu, k + 1));
        c.expect(deg == 0, [&] {
          return "tau_" + std::to_string(k) + " acts on " + m.labels[p] + " with degree " + std::to_string(deg);
        });
      });
    for (int k = 1; k <= len && c.open(); ++k)
      m.x(k).for_each([&](std::size_t, std::size_t p, std::int64_t) {
        const auto& nu = m.sequences[p];
        const int deg = datum.root_pairing(letter(nu, k), letter(nu, k));
        c.expect(deg == 0, [&] {
          return "x_" + std::to_string(k) + " acts on " + m.labels[p] + " with degree " + std::to_string(deg);
        });
      });
    report.families.push_back(c.result);
  }
  return report;
}

/// The cyclotomic generators x_l^{<h_{nu_l}, Lambda>} e(nu) act as zero:
/// sequences ending away from the cyclotomic node must not occur, and x_l
/// must kill the ones ending at it.
inline CheckResult check_cyclotomic(const HomogeneousModule& m) {
  CheckResult r{"cyclotomic"};
  if (m.height == 0) return r;
  const detail::RationalOps ops(m);
  const Weight lambda = fundamental_weight(m.datum, m.node);
  for (const auto& [nu, e] : ops.e) {
    ++r.checked;
    const int exponent = lambda[nu.back()];
    const auto gen = detail::left_power(ops.X(m.height), exponent, e);
    if (!gen.is_zero()) {
      r.status = Status::fail;
      r.witness = "x_" + std::to_string(m.height) + "^" + std::to_string(exponent) + " e" + to_string(nu) +
                  " acts nontrivially";
      return r;
    }
  }
  return r;
}

/// Structural homogeneity checks beyond the relation suite:
///  * crossing_entries: every nonzero tau_k entry is 1 and joins sequences
///    related by a swap of orthogonal letters;
///  * swap_criterion: tau_k e(nu) != 0 exactly when a_{nu_k, nu_k+1} = 0;
///  * homogeneous_condition (simply-laced types): a repeated letter
///    nu_r = nu_s has neighbours t < u strictly between with
///    a_{nu_r, nu_t} = a_{nu_u, nu_s} = -1;
///  * residue_pattern (type B): nu_k != nu_k+1, and nu_k = nu_k+2 forces
///    (nu_k, nu_k+1, nu_k+2) = (1, 2, 1).
inline std::vector<CheckResult> check_homogeneity(const HomogeneousModule& m) {
  using detail::letter;
  const auto& datum = m.datum;
  std::vector<CheckResult> out;

  CheckResult entries{"crossing_entries"};
  for (int k = 1; k < m.height && entries.passed(); ++k)
    m.tau(k).for_each([&](std::size_t q, std::size_t p, std::int64_t v) {
      if (!entries.passed()) return;
      ++entries.checked;
      const auto& nu = m.sequences[p];
      const bool ok = v == 1 && m.sequences[q] == place_swap(nu, k) && datum.a(letter(nu, k), letter(nu, k + 1)) == 0;
      if (!ok) {
        entries.status = Status::fail;
        entries.witness = "tau_" + std::to_string(k) + " entry (" + m.labels[q] + ", " + m.labels[p] + ") = " +
                          std::to_string(v);
      }
    });
  out.push_back(entries);

  CheckResult swap{"swap_criterion"};
  for (int k = 1; k < m.height && swap.passed(); ++k) {
    std::vector<bool> acts(m.dimension(), false);
    m.tau(k).for_each([&](std::size_t, std::size_t p, std::int64_t) { acts[p] = true; });
    for (std::size_t p = 0; p < m.dimension(); ++p) {
      ++swap.checked;
      const auto& nu = m.sequences[p];
      if (acts[p] != (datum.a(letter(nu, k), letter(nu, k + 1)) == 0)) {
        swap.status = Status::fail;
        swap.witness = "tau_" + std::to_string(k) + " on " + m.labels[p];
        break;
      }
    }
  }
  out.push_back(swap);

  CheckResult homo{"homogeneous_condition"};
  if (!datum.simply_laced()) {
    homo.status = Status::skipped;
    homo.witness = "condition stated for simply-laced types";
  } else {
    for (const auto& nu : m.sequences) {
      ++homo.checked;
      const int n = static_cast<int>(nu.size());
      for (int r = 1; r <= n && homo.passed(); ++r)
        for (int s = r + 1; s <= n && homo.passed(); ++s) {
          if (letter(nu, r) != letter(nu, s)) continue;
          bool found = false;
          for (int t = r + 1; t < s && !found; ++t)
            for (int u = t + 1; u < s && !found; ++u)
              found = datum.a(letter(nu, r), letter(nu, t)) == -1 && datum.a(letter(nu, u), letter(nu, s)) == -1;
          if (!found) {
            homo.status = Status::fail;
            homo.witness = to_string(nu) + " at positions " + std::to_string(r) + "," + std::to_string(s);
          }
        }
      if (!homo.passed()) break;
    }
  }
  out.push_back(homo);

  CheckResult pattern{"residue_pattern"};
  if (datum.type() != CartanType::B) {
    pattern.status = Status::skipped;
    pattern.witness = "type B only";
  } else {
    for (const auto& nu : m.sequences) {
      ++pattern.checked;
      const int n = static_cast<int>(nu.size());
      for (int k = 1; k < n && pattern.passed(); ++k) {
        bool ok = letter(nu, k) != letter(nu, k + 1);
        if (k + 2 <= n && letter(nu, k) == letter(nu, k + 2))
          ok = ok && letter(nu, k) == 1 && letter(nu, k + 1) == 2;
        if (!ok) {
          pattern.status = Status::fail;
          pattern.witness = to_string(nu) + " at position " + std::to_string(k);
        }
      }
      if (!pattern.passed()) break;
    }
  }
  out.push_back(pattern);
  return out;
}

}  // namespace minuscule::klr
