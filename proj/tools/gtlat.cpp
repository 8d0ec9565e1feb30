// Command-line driver: builds Gelfand-Tsetlin lattices, labels and verifies
// them, materializes representation matrices, and re-derives the edge
// products from the vertex weights alone.

#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "gt/export.hpp"
#include "gt/forcing.hpp"
#include "gt/verify.hpp"

namespace {

struct RunConfig {
  std::string shape_text;
  int n = 0;
  std::string format = "text";
  std::string out_path;
  unsigned long seed = 0;
  int trials = 1000;
  bool exhaustive_diamond = false;
  bool per_component_forcing = false;
};

void write_output(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + cfg.out_path);
  out << payload;
}

std::string dump(const gt::Json& doc) { return doc.dump(2) + "\n"; }

gt::GtLattice make_lattice(const RunConfig& cfg) {
  gt::Partition shape = gt::Partition::parse(cfg.shape_text);
  return gt::build_lattice(shape, cfg.n);
}

int cmd_build(const RunConfig& cfg) {
  gt::GtLattice lat = make_lattice(cfg);
  if (cfg.format == "dot")
    write_output(cfg, gt::to_dot(lat));
  else if (cfg.format == "json")
    write_output(cfg, dump(gt::lattice_json(lat)));
  else
    write_output(cfg, "vertices=" + std::to_string(lat.size()) +
                          " edges=" + std::to_string(lat.edges().size()) + "\n");
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  gt::GtLattice lat = make_lattice(cfg);
  gt::EdgeLabeling lab = gt::label_all(lat);
  std::vector<gt::ConditionReport> reports = {
      gt::check_structure(lat),
      gt::check_crossing(lat, lab),
      gt::check_diamond(lat, lab, cfg.exhaustive_diamond),
      gt::check_sl_relations(lat, lab),
      gt::compare_products(lat, lab),
  };
  bool ok = true;
  gt::Json doc;
  doc["labeling"] = gt::labeling_json(lat, lab);
  doc["reports"] = gt::Json::array();
  std::string text;
  for (const auto& report : reports) {
    ok = ok && report.pass();
    doc["reports"].push_back(gt::report_json(report));
    text += report.condition + ": " + (report.pass() ? "pass" : "FAIL") + "\n";
    for (const auto& v : report.violations)
      text += "  " + v.context + ": expected " + v.expected + ", got " + v.actual + "\n";
  }
  write_output(cfg, cfg.format == "json" ? dump(doc) : text);
  return ok ? 0 : 1;
}

int cmd_matrices(const RunConfig& cfg) {
  gt::GtLattice lat = make_lattice(cfg);
  gt::EdgeLabeling lab = gt::label_all(lat);
  gt::Json doc;
  doc["X"] = gt::Json::array();
  doc["Y"] = gt::Json::array();
  doc["H"] = gt::Json::array();
  doc["E"] = gt::Json::array();
  for (int k = 1; k <= lat.num_colors(); ++k) {
    doc["X"].push_back(gt::matrix_json(gt::matrix_X(lat, lab, k)));
    doc["Y"].push_back(gt::matrix_json(gt::matrix_Y(lat, lab, k)));
    doc["H"].push_back(gt::matrix_json(gt::matrix_H(lat, k)));
  }
  for (int k = 1; k <= lat.n(); ++k)
    doc["E"].push_back(gt::matrix_json(gt::matrix_Ekk_diag(lat, k)));
  write_output(cfg, dump(doc));
  return 0;
}

int cmd_force(const RunConfig& cfg) {
  gt::GtLattice lat = make_lattice(cfg);
  gt::EdgeLabeling lab = gt::label_all(lat);
  gt::ProductAssignment assignment = gt::force_all(
      lat, cfg.per_component_forcing ? gt::ForcingMode::kPerComponent
                                     : gt::ForcingMode::kRankSweep);
  gt::ConditionReport report = gt::compare_forced_vs_formula(lat, lab, assignment);
  if (cfg.format == "json") {
    gt::Json doc;
    doc["trace"] = gt::trace_json(lat, assignment);
    doc["comparison"] = gt::report_json(report);
    write_output(cfg, dump(doc));
  } else {
    write_output(cfg, "forced " + std::to_string(lat.edges().size()) + " products, formula " +
                          (report.pass() ? "agreement" : "MISMATCH") + "\n");
  }
  return report.pass() ? 0 : 1;
}

int cmd_identity(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  int failures = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    gt::IdentityInstance inst = gt::random_identity_instance(rng, 8);
    if (!gt::check_identity(inst)) ++failures;
  }
  if (cfg.format == "json") {
    gt::Json doc;
    doc["seed"] = cfg.seed;
    doc["trials"] = cfg.trials;
    doc["failures"] = failures;
    doc["pass"] = failures == 0;
    write_output(cfg, dump(doc));
  } else {
    write_output(cfg, "identity: " + std::to_string(cfg.trials - failures) + "/" +
                          std::to_string(cfg.trials) + " instances hold (seed=" +
                          std::to_string(cfg.seed) + ")\n");
  }
  return failures == 0 ? 0 : 1;
}

int cmd_dim(const RunConfig& cfg) {
  gt::Partition shape = gt::Partition::parse(cfg.shape_text);
  auto fillings = gt::enumerate_ssyt(shape, cfg.n);
  gt::Int weyl = gt::weyl_dimension(shape, cfg.n);
  if (cfg.format == "json") {
    gt::Json doc;
    doc["count"] = fillings.size();
    doc["weyl"] = weyl.get_str();
    doc["pass"] = weyl == static_cast<long>(fillings.size());
    write_output(cfg, dump(doc));
  } else {
    write_output(cfg, std::to_string(fillings.size()) + ", " + weyl.get_str() + "\n");
  }
  return weyl == static_cast<long>(fillings.size()) ? 0 : 1;
}

void add_shape_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--shape", cfg.shape_text, "partition, e.g. 2,1")->required();
  app->add_option("--n", cfg.n, "entry bound (>= 2)")->required()->check(CLI::Range(2, 64));
}

void add_io_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--out", cfg.out_path, "output file (default stdout)");
  app->add_option("--format", cfg.format, "json | dot | text")
      ->check(CLI::IsMember({"json", "dot", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gelfand-Tsetlin lattice construction, labeling, and verification"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* build = app.add_subcommand("build", "build the lattice and export it");
  add_shape_options(build, cfg);
  add_io_options(build, cfg);

  CLI::App* verify = app.add_subcommand("verify", "label the lattice and check every condition");
  add_shape_options(verify, cfg);
  add_io_options(verify, cfg);
  verify->add_flag("--exhaustive-diamond", cfg.exhaustive_diamond,
                   "scan all same-rank pairs instead of cover-adjacent ones");

  CLI::App* matrices = app.add_subcommand("matrices", "write generator matrices as JSON");
  add_shape_options(matrices, cfg);
  add_io_options(matrices, cfg);

  CLI::App* force = app.add_subcommand("force", "derive edge products from vertex weights");
  add_shape_options(force, cfg);
  add_io_options(force, cfg);
  force->add_flag("--per-component-forcing", cfg.per_component_forcing,
                  "schedule vertices component by component");

  CLI::App* identity = app.add_subcommand("identity", "random rational identity instances");
  add_io_options(identity, cfg);
  identity->add_option("--seed", cfg.seed, "RNG seed");
  identity->add_option("--trials", cfg.trials, "instance count")->check(CLI::PositiveNumber);

  CLI::App* dim = app.add_subcommand("dim", "enumeration count and product-formula dimension");
  add_shape_options(dim, cfg);
  add_io_options(dim, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_build(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (matrices->parsed()) return cmd_matrices(cfg);
    if (force->parsed()) return cmd_force(cfg);
    if (identity->parsed()) return cmd_identity(cfg);
    if (dim->parsed()) return cmd_dim(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
