#pragma once

#include "minuscule/crystal.hpp"
#include "minuscule/klr/basis.hpp"
#include "minuscule/klr/checks.hpp"
#include "minuscule/klr/module.hpp"
#include "minuscule/klr/qspec.hpp"
#include "minuscule/klr/relations.hpp"
#include "minuscule/tableaux.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace minuscule {

struct SweepOptions {
  /// Vertices with l(w(b)) above this are skipped; negative means no bound.
  int max_level = -1;
  std::uint64_t path_cap = kDefaultPathCap;
  int word_cap = kDefaultWordCap;
  /// When nonzero, vertices above the path cap are smoke-tested on their
  /// first `sample` paths instead of being skipped.
  std::uint64_t sample = 0;
  bool basis = true;
  klr::BasisOptions basis_options{klr::kDefaultWordBound, 20, false};
};

struct VertexReport {
  std::size_t vertex = 0;
  Weight weight;
  int level = 0;
  std::string label;
  std::uint64_t paths = 0;
  std::vector<CheckResult> checks;

  bool failed() const {
    for (const auto& c : checks)
      if (c.failed()) return true;
    return false;
  }
};

struct SweepReport {
  std::string datum_label;
  int node = 1;
  SweepOptions options;
  std::vector<VertexReport> vertices;

  /// One line per check name (first-seen order): fail if any vertex failed,
  /// pass if any passed, skipped otherwise.
  std::vector<CheckResult> summary() const {
    std::vector<CheckResult> out;
    std::map<std::string, std::size_t> at;
    std::map<std::string, bool> any_pass;
    for (const auto& v : vertices)
      for (const auto& c : v.checks) {
        auto [it, fresh] = at.try_emplace(c.name, out.size());
        if (fresh) out.push_back({c.name, Status::skipped});
        auto& agg = out[it->second];
        agg.checked += c.checked;
        if (c.failed() && !agg.failed()) {
          agg.status = Status::fail;
          agg.witness = v.label + ": " + c.witness;
        }
        if (c.passed()) any_pass[c.name] = true;
      }
    for (auto& c : out)
      if (!c.failed() && any_pass[c.name]) c.status = Status::pass;
    return out;
  }

  bool passed() const {
    for (const auto& v : vertices)
      if (v.failed()) return false;
    return true;
  }
};

namespace detail {

inline CheckResult skipped(const std::string& name, const std::string& why) {
  return {name, Status::skipped, why, 0};
}

inline const std::vector<std::string>& module_check_names() {
  static const std::vector<std::string> names = [] {
    auto n = klr::relation_family_names();
    n.insert(n.end(), {"cyclotomic", "crossing_entries", "swap_criterion", "homogeneous_condition",
                       "residue_pattern", "basis_elementary", "basis_connecting_oracle", "basis_word_independence",
                       "basis_degree", "basis_orthogonality", "basis_composition", "basis_completeness"});
    return n;
  }();
  return names;
}

/// Relation families (over every QSpec), cyclotomic, homogeneity and
/// matrix-unit checks for one module.
inline void check_module(const klr::HomogeneousModule& m, const std::vector<klr::QSpec>& qspecs,
                         const SweepOptions& opt, std::vector<CheckResult>& out) {
  std::vector<CheckResult> families;
  for (const auto& name : klr::relation_family_names()) families.push_back({name});
  for (const auto& q : qspecs) {
    const auto rep = klr::check_klr_relations(m, q);
    for (std::size_t f = 0; f < families.size(); ++f) absorb(families[f], rep.families[f], q.name());
  }
  out.insert(out.end(), families.begin(), families.end());
  out.push_back(klr::check_cyclotomic(m));
  for (auto& c : klr::check_homogeneity(m)) out.push_back(std::move(c));
  if (!opt.basis) {
    for (const char* name : {"basis_elementary", "basis_connecting_oracle", "basis_word_independence", "basis_degree",
                             "basis_orthogonality", "basis_composition", "basis_completeness"})
      out.push_back(skipped(name, "basis checks disabled"));
    return;
  }
  auto basis = klr::check_cyclotomic_basis(m, opt.basis_options);
  for (auto& c : basis.checks) {
    c.name = "basis_" + c.name;
    out.push_back(std::move(c));
  }
}

/// w(b) Lambda = wt(b), l(w(b)) = level, and full commutativity within the
/// word cap.
inline CheckResult check_minuscule_element(const CrystalGraph& crystal, std::size_t v, int word_cap) {
  CheckResult r{"minuscule_element", Status::pass, "", 1};
  const auto& datum = crystal.datum();
  const auto w = minuscule_element(crystal, v);
  if (act(datum, w, fundamental_weight(datum, crystal.node())) != crystal.weight(v)) {
    r.status = Status::fail;
    r.witness = "w(b) Lambda != wt(b)";
  } else if (length(datum, w) != crystal.level(v)) {
    r.status = Status::fail;
    r.witness = "l(w(b)) = " + std::to_string(length(datum, w)) + " but the level is " +
                std::to_string(crystal.level(v));
  } else if (crystal.level(v) <= word_cap && !is_fully_commutative(datum, w)) {
    r.status = Status::fail;
    r.witness = "w(b) is not fully commutative";
  }
  return r;
}

}  // namespace detail

/// The full per-vertex suite over one minuscule crystal. Type B_n (node 1)
/// uses the tableau modules and also checks res: ST(lambda_b) -> Pa(b).
inline SweepReport run_sweep(const CartanDatum& datum, int node, const SweepOptions& opt = {}) {
  const CrystalGraph crystal(datum, node);
  const auto counts = path_counts(crystal);
  const auto qspecs = klr::standard_qspecs(datum);
  const bool tableaux = datum.type() == CartanType::B;
  const auto lambdas = tableaux ? partitions_by_weight(datum.rank()) : std::map<Weight, StrictPartition>{};

  SweepReport rep{datum.label(), node, opt};
  std::vector<std::size_t> order(crystal.size());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return crystal.level(a) != crystal.level(b) ? crystal.level(a) < crystal.level(b)
                                                : crystal.weight(a) > crystal.weight(b);
  });

  for (auto v : order) {
    VertexReport vr{v, crystal.weight(v), crystal.level(v), to_string(crystal.weight(v)), counts[v]};
    if (tableaux) vr.label = lambdas.at(vr.weight).str() + " " + vr.label;
    if (opt.max_level >= 0 && vr.level > opt.max_level) {
      vr.checks.push_back(detail::skipped("vertex", "level " + std::to_string(vr.level) + " above the length bound " +
                                                        std::to_string(opt.max_level)));
      rep.vertices.push_back(std::move(vr));
      continue;
    }
    vr.checks.push_back(detail::check_minuscule_element(crystal, v, opt.word_cap));
    vr.checks.push_back(check_path_word_bijection(crystal, v, opt.word_cap, opt.path_cap));

    if (vr.paths > opt.path_cap) {
      const std::string why = std::to_string(vr.paths) + " paths exceed the cap " + std::to_string(opt.path_cap);
      if (opt.sample > 0) {
        CheckResult s{"sampled_paths"};
        const auto w = minuscule_element(crystal, v);
        for (const auto& p : sample_paths(crystal, v, opt.sample)) {
          ++s.checked;
          if (follow_path(crystal, p) != v || !(WeylElement::from_word(datum, p) == w)) {
            s.status = Status::fail;
            s.witness = "sampled path " + to_string(p);
            break;
          }
        }
        vr.checks.push_back(s);
      }
      for (const auto& name : detail::module_check_names()) vr.checks.push_back(detail::skipped(name, why));
      rep.vertices.push_back(std::move(vr));
      continue;
    }

    if (tableaux) {
      const auto& lambda = lambdas.at(vr.weight);
      const auto m = klr::build_module_tableaux(datum.rank(), lambda);
      CheckResult tp{"tableau_paths", Status::pass, "", 1};
      const auto ps = paths(crystal, v, opt.path_cap);
      if (std::set<Sequence>(m.sequences.begin(), m.sequences.end()) != std::set<Sequence>(ps.begin(), ps.end()) ||
          m.dimension() != ps.size()) {
        tp.status = Status::fail;
        tp.witness = "res(ST" + lambda.str() + ") differs from Pa(b)";
      }
      vr.checks.push_back(tp);
      detail::check_module(m, qspecs, opt, vr.checks);
    } else {
      detail::check_module(klr::build_module_paths(crystal, v, opt.path_cap), qspecs, opt, vr.checks);
    }
    rep.vertices.push_back(std::move(vr));
  }
  return rep;
}

/// Branching and head-witness checks over Par_n, |lambda| in [1, max_m].
inline CheckReport run_partition_sweep(int n, int max_m) {
  CheckReport rep{"Par_" + std::to_string(n)};
  CheckResult count{"branching_count"};
  CheckResult restriction{"branching_restriction"};
  CheckResult arrows{"branching_crystal_arrows"};
  CheckResult head{"head_witness"};
  for (const auto& lambda : strict_partitions(n)) {
    if (lambda.empty() || lambda.size() > max_m) continue;
    const auto b = klr::branching_check(n, lambda);
    absorb(count, b.check("count"), lambda.str());
    absorb(restriction, b.check("restriction"), lambda.str());
    absorb(arrows, b.check("crystal_arrows"), lambda.str());
    absorb(head, klr::head_witness_check(n, lambda), lambda.str());
  }
  rep.checks = {count, restriction, arrows, head};
  return rep;
}

}  // namespace minuscule
