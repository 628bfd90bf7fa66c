#pragma once

#include "minuscule/crystal.hpp"
#include "minuscule/klr/checks.hpp"
#include "minuscule/klr/module.hpp"
#include "minuscule/sweep.hpp"
#include "minuscule/tableaux.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <string>

namespace minuscule::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kDatumSchema = "cartan-datum/1";
inline constexpr const char* kCrystalSchema = "crystal/1";
inline constexpr const char* kVerifySchema = "klr-verify-report/1";
inline constexpr const char* kDimensionSchema = "dimension-table/1";
inline constexpr const char* kTableauSchema = "tableau/1";

inline Json to_json(const CartanDatum& d) {
  std::vector<int> nodes(d.minuscule_nodes().begin(), d.minuscule_nodes().end());
  return Json{{"schema", kDatumSchema},   {"type", type_name(d.type())}, {"rank", d.rank()},
              {"label", d.label()},       {"cartan_matrix", d.matrix()}, {"symmetrizers", d.symmetrizers()},
              {"minuscule_nodes", nodes}};
}

inline CartanDatum datum_from_json(const Json& j) {
  if (j.at("schema") != kDatumSchema) throw Error("unsupported datum schema");
  auto d = make_datum(j.at("type").get<std::string>(), j.at("rank").get<int>());
  if (d.matrix() != j.at("cartan_matrix").get<IntMatrix>()) throw Error("datum document disagrees with the labeling");
  return d;
}

inline Json to_json(const CheckResult& c) {
  Json j{{"name", c.name}, {"status", status_name(c.status)}, {"checked", c.checked}};
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

inline Json to_json(const CheckReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"subject", r.subject}, {"status", r.passed() ? "pass" : "fail"}, {"checks", checks}};
}

inline Json to_json(const StandardTableau& t) {
  return Json{{"schema", kTableauSchema}, {"shape", t.shape().parts()}, {"entries", t.rows()}};
}

inline Json crystal_json(const CrystalGraph& c) {
  const auto counts = path_counts(c);
  Json vertices = Json::array();
  Json edges = Json::array();
  for (std::size_t v = 0; v < c.size(); ++v) {
    vertices.push_back(
        Json{{"index", v}, {"weight", c.weight(v).coords}, {"level", c.level(v)}, {"paths", counts[v]}});
    for (int j = 1; j <= c.datum().rank(); ++j)
      if (auto t = c.f(v, j); t != CrystalGraph::npos) edges.push_back(Json{{"from", v}, {"to", t}, {"letter", j}});
  }
  return Json{{"schema", kCrystalSchema}, {"datum", to_json(c.datum())}, {"node", c.node()},
              {"highest", c.highest()},   {"vertices", vertices},       {"edges", edges}};
}

inline std::string crystal_dot(const CrystalGraph& c) {
  std::ostringstream os;
  os << "digraph \"B(Lambda_" << c.node() << ") " << c.datum().label() << "\" {\n";
  for (std::size_t v = 0; v < c.size(); ++v) os << "  v" << v << " [label=\"" << to_string(c.weight(v)) << "\"];\n";
  for (std::size_t v = 0; v < c.size(); ++v)
    for (int j = 1; j <= c.datum().rank(); ++j)
      if (auto t = c.f(v, j); t != CrystalGraph::npos) os << "  v" << v << " -> v" << t << " [label=\"" << j << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::string crystal_text(const CrystalGraph& c) {
  const auto counts = path_counts(c);
  std::ostringstream os;
  os << c.datum().label() << " B(Lambda_" << c.node() << "): " << c.size() << " vertices, " << c.edge_count()
     << " edges\n";
  os << std::left << std::setw(24) << "weight" << std::setw(8) << "level" << "paths\n";
  for (std::size_t v = 0; v < c.size(); ++v)
    os << std::setw(24) << to_string(c.weight(v)) << std::setw(8) << c.level(v) << counts[v] << "\n";
  return os.str();
}

inline Json to_json(const SweepReport& r) {
  Json summary = Json::array();
  for (const auto& c : r.summary()) summary.push_back(to_json(c));
  Json vertices = Json::array();
  for (const auto& v : r.vertices) {
    Json checks = Json::array();
    for (const auto& c : v.checks) checks.push_back(to_json(c));
    vertices.push_back(Json{{"label", v.label},
                            {"weight", v.weight.coords},
                            {"level", v.level},
                            {"paths", v.paths},
                            {"status", v.failed() ? "fail" : "pass"},
                            {"checks", checks}});
  }
  const auto& o = r.options;
  return Json{{"datum", r.datum_label},
              {"node", r.node},
              {"options",
               {{"max_level", o.max_level}, {"path_cap", o.path_cap}, {"word_cap", o.word_cap}, {"sample", o.sample}}},
              {"status", r.passed() ? "pass" : "fail"},
              {"summary", summary},
              {"vertices", vertices}};
}

inline Json to_json(const klr::DimensionTable& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries)
    entries.push_back(Json{{"level", e.level},
                           {"weight", e.weight.coords},
                           {"label", e.label},
                           {"basis", e.basis},
                           {"dimension", e.dimension}});
  Json totals = Json::array();
  for (const auto& [m, total] : t.totals) totals.push_back(Json{{"level", m}, {"dimension", total}});
  return Json{{"schema", kDimensionSchema}, {"datum", t.datum_label}, {"node", t.node},       {"max_m", t.max_m},
              {"top_level", t.top_level},   {"totals", totals},     {"entries", entries}};
}

inline std::string dimension_text(const klr::DimensionTable& t) {
  std::ostringstream os;
  os << t.datum_label << " Lambda_" << t.node << ", levels 0.." << t.top_level << "\n";
  os << std::left << std::setw(8) << "level" << std::setw(28) << "xi" << std::setw(10) << "basis" << "dim\n";
  for (const auto& e : t.entries)
    os << std::setw(8) << e.level << std::setw(28) << e.label << std::setw(10) << e.basis << e.dimension << "\n";
  os << "totals:";
  for (const auto& [m, total] : t.totals) os << " " << m << ":" << total;
  os << "\n";
  return os.str();
}

inline std::string report_text(const CheckReport& r) {
  std::ostringstream os;
  os << r.subject << ": " << (r.passed() ? "pass" : "fail") << "\n";
  for (const auto& c : r.checks) {
    os << "  " << std::left << std::setw(28) << c.name << std::setw(8) << status_name(c.status) << c.checked;
    if (!c.witness.empty()) os << "  " << c.witness;
    os << "\n";
  }
  return os.str();
}

inline std::string sweep_text(const SweepReport& r) {
  return report_text(CheckReport{r.datum_label + " B(Lambda_" + std::to_string(r.node) + "), " +
                                     std::to_string(r.vertices.size()) + " vertices",
                                 r.summary()});
}

/// e(nu), x_k and tau_k in sparse triplet form, one block per operator.
inline std::string module_triplets(const klr::HomogeneousModule& m) {
  std::ostringstream os;
  os << "# module " << m.datum.label() << " node " << m.node << " weight " << to_string(m.weight) << " dim "
     << m.dimension() << "\n";
  for (std::size_t p = 0; p < m.dimension(); ++p) os << "# basis " << p << " " << m.labels[p] << " " << to_string(m.sequences[p]) << "\n";
  for (const auto& [nu, e] : m.idempotents) os << "e" << to_string(nu) << "\n" << e.to_triplet_text();
  for (int k = 1; k <= m.height; ++k) os << "x_" << k << "\n" << m.x(k).to_triplet_text();
  for (int k = 1; k < m.height; ++k) os << "tau_" << k << "\n" << m.tau(k).to_triplet_text();
  return os.str();
}

}  // namespace minuscule::io
