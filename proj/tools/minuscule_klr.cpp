// Command-line front end: crystals, the verification suite and dimension
// tables.

#include "minuscule/export.hpp"
#include "minuscule/sweep.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using namespace minuscule;

namespace {

struct JobConfig {
  std::string type;
  int rank = 0;
  int node = 0;
  int max_m = -1;
  std::uint64_t path_cap = kDefaultPathCap;
  int word_cap = kDefaultWordCap;
  std::uint64_t sample = 0;
  bool no_basis = false;
  bool compare_d = false;
  std::string format = "text";
  std::string output;
  std::string cache_dir;
  std::string dump_datum;
};

/// What a command produced: the document and whether anything failed.
struct Outcome {
  std::string document;
  bool failed = false;
};

CartanDatum datum_of(const JobConfig& c) { return make_datum(c.type, c.rank); }

int node_of(const JobConfig& c, const CartanDatum& d) {
  if (c.node != 0) return c.node;
  return *d.minuscule_nodes().begin();
}

std::string cache_root(const JobConfig& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  if (const char* env = std::getenv("MINUSCULE_KLR_CACHE")) return env;
  return {};
}

std::string sanitize(std::string s) {
  for (auto& ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '.') ch = '_';
  return s;
}

std::string cache_key(const std::string& command, const char* schema, const JobConfig& c, int node) {
  std::ostringstream os;
  os << schema << "-" << command << "-" << datum_of(c).label() << "-n" << node << "-m" << c.max_m << "-p" << c.path_cap
     << "-w" << c.word_cap << "-s" << c.sample << "-b" << !c.no_basis << "-d" << c.compare_d << "-" << c.format;
  return sanitize(os.str()) + ".cache";
}

std::optional<Outcome> cache_load(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::string status;
  if (!std::getline(in, status) || (status != "status pass" && status != "status fail")) return std::nullopt;
  std::ostringstream body;
  body << in.rdbuf();
  return Outcome{body.str(), status == "status fail"};
}

void cache_store(const fs::path& file, const Outcome& o) {
  fs::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << (o.failed ? "status fail\n" : "status pass\n") << o.document;
  }
  fs::rename(tmp, file);
}

/// Runs `produce` unless a cached document for the same key exists.
template <typename Produce>
Outcome cached(const JobConfig& c, const std::string& command, const char* schema, int node, Produce&& produce) {
  const auto root = cache_root(c);
  if (root.empty()) return produce();
  const fs::path file = fs::path(root) / cache_key(command, schema, c, node);
  if (auto hit = cache_load(file)) return *hit;
  auto o = produce();
  cache_store(file, o);
  return o;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

Outcome crystal_command(const JobConfig& c) {
  const auto d = datum_of(c);
  const int node = node_of(c, d);
  return cached(c, "crystal", io::kCrystalSchema, node, [&] {
    const CrystalGraph crystal(d, node);
    if (c.format == "json") return Outcome{dump(io::crystal_json(crystal))};
    if (c.format == "dot") return Outcome{io::crystal_dot(crystal)};
    return Outcome{io::crystal_text(crystal)};
  });
}

Outcome verify_command(const JobConfig& c) {
  const auto d = datum_of(c);
  const int node = node_of(c, d);
  return cached(c, "verify", io::kVerifySchema, node, [&] {
    SweepOptions opt;
    opt.max_level = c.max_m;
    opt.path_cap = c.path_cap;
    opt.word_cap = c.word_cap;
    opt.sample = c.sample;
    opt.basis = !c.no_basis;
    const auto sweep = run_sweep(d, node, opt);
    std::optional<CheckReport> partitions;
    if (d.type() == CartanType::B) {
      const int n = d.rank();
      partitions = run_partition_sweep(n, c.max_m < 0 ? n * (n + 1) / 2 : c.max_m);
    }
    Outcome o;
    o.failed = !sweep.passed() || (partitions && !partitions->passed());
    if (c.format == "json") {
      io::Json j{{"schema", io::kVerifySchema}, {"status", o.failed ? "fail" : "pass"}, {"sweep", io::to_json(sweep)}};
      if (partitions) j["partitions"] = io::to_json(*partitions);
      o.document = dump(j);
    } else {
      o.document = io::sweep_text(sweep);
      if (partitions) o.document += io::report_text(*partitions);
      o.document += o.failed ? "result: fail\n" : "result: pass\n";
    }
    return o;
  });
}

Outcome dimensions_command(const JobConfig& c) {
  const auto d = datum_of(c);
  const int node = node_of(c, d);
  if (c.max_m < 0) throw Error("dimensions needs --max-m");
  if (c.compare_d && d.type() != CartanType::B) throw Error("--compare-D applies to type B");
  return cached(c, "dimensions", io::kDimensionSchema, node, [&] {
    const auto table = klr::dimension_table(d, node, c.max_m);
    std::optional<CheckReport> iso;
    if (c.compare_d) iso = klr::isomorphism_check_B_D(d.rank(), c.max_m);
    Outcome o;
    o.failed = iso && !iso->passed();
    if (c.format == "json") {
      io::Json j = io::to_json(table);
      if (iso) j["compare_D"] = io::to_json(*iso);
      o.document = dump(j);
    } else {
      o.document = io::dimension_text(table);
      if (iso) o.document += io::report_text(*iso);
    }
    return o;
  });
}

void add_common(CLI::App* sub, JobConfig& c, bool needs_max_m) {
  sub->add_option("--type", c.type, "Cartan type: A, B, C, D, E6, E7 (or E with --rank)")->required();
  sub->add_option("--rank", c.rank, "Rank n")->required();
  sub->add_option("--node", c.node, "Minuscule node (default: the smallest one)");
  auto* m = sub->add_option("--max-m", c.max_m, "Largest level m = Ht(beta) to include");
  if (needs_max_m) m->required();
  sub->add_option("--path-cap", c.path_cap, "Largest |Pa(b)| materialized")->check(CLI::PositiveNumber);
  sub->add_option("--word-cap", c.word_cap, "Largest l(w) for reduced-word enumeration")->check(CLI::PositiveNumber);
  sub->add_option("--output,-o", c.output, "Write the document here instead of stdout");
  sub->add_option("--cache-dir", c.cache_dir, "Result cache (also MINUSCULE_KLR_CACHE)");
  sub->add_option("--dump-datum", c.dump_datum, "Also write the Cartan datum as JSON to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minuscule crystals and homogeneous cyclotomic KLR modules"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto* crystal = app.add_subcommand("crystal", "Build B(Lambda_i) and export it");
  add_common(crystal, cfg, false);
  crystal->add_option("--format", cfg.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));

  auto* verify = app.add_subcommand("verify", "Run the relation, cyclotomic and basis suite on every vertex");
  add_common(verify, cfg, false);
  verify->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--sample", cfg.sample, "Smoke-test vertices above the path cap on k paths");
  verify->add_flag("--no-basis", cfg.no_basis, "Skip the matrix-unit basis checks");

  auto* dims = app.add_subcommand("dimensions", "Dimension table of R^Lambda(xi) per weight and level");
  add_common(dims, cfg, true);
  dims->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  dims->add_flag("--compare-D", cfg.compare_d, "Compare with D_{n+1} at Lambda_1 and Lambda_2 (type B)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!cfg.dump_datum.empty()) write_text(cfg.dump_datum, dump(io::to_json(datum_of(cfg))));
    Outcome o;
    if (crystal->parsed()) o = crystal_command(cfg);
    else if (verify->parsed()) o = verify_command(cfg);
    else o = dimensions_command(cfg);

    if (cfg.output.empty()) {
      std::cout << o.document;
    } else {
      write_text(cfg.output, o.document);
      if (crystal->parsed() && cfg.format != "text") {
        auto summary = cfg;
        summary.format = "text";
        std::cout << crystal_command(summary).document;
      }
      std::cout << (o.failed ? "fail" : "pass") << ": wrote " << cfg.output << "\n";
    }
    return o.failed ? 1 : 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
