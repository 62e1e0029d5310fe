#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "padiclie/errors.hpp"
#include "padiclie/experiments.hpp"
#include "padiclie/runtime.hpp"

using namespace padiclie;

namespace {

struct CliOptions {
  std::string config_path;
  std::string experiment_id;
  std::string out_path;
  int jobs = 0;
  std::uint64_t seed = 0;
  bool have_seed = false;

  // per-run overrides
  std::string type_label;
  unsigned long p = 0;
  int deformation = -1;
  long degree_bound = 0;
  int precision = 0;
  int alpha_bound = -1;
  int beta_bound = -1;
  int mu_box = 0;
  int count = 0;
  std::string group_preset;
};

void apply_overrides(ExperimentConfig& cfg, const CliOptions& opt) {
  if (!opt.type_label.empty()) cfg.type_label = opt.type_label;
  if (opt.p != 0) cfg.p = opt.p;
  if (opt.deformation >= 0) cfg.deformation = opt.deformation;
  if (opt.degree_bound > 0) cfg.degree_bound = opt.degree_bound;
  if (opt.precision > 0) cfg.precision = opt.precision;
  if (opt.alpha_bound >= 0) cfg.alpha_bound = opt.alpha_bound;
  if (opt.beta_bound >= 0) cfg.beta_bound = opt.beta_bound;
  if (opt.mu_box > 0) cfg.mu_box = opt.mu_box;
  if (opt.count > 0) cfg.count = opt.count;
  if (opt.have_seed) cfg.seed = opt.seed;
  if (!opt.group_preset.empty()) cfg.group_preset = opt.group_preset;
}

int run_kind(const std::string& kind, const CliOptions& opt) {
  runtime::set_jobs(opt.jobs);
  std::vector<ExperimentConfig> configs;
  if (!opt.config_path.empty()) {
    for (auto& c : experiments_from_config_file(opt.config_path)) {
      if (kind != "all" && c.kind != kind) continue;
      if (!opt.experiment_id.empty() && c.id != opt.experiment_id) continue;
      configs.push_back(std::move(c));
    }
    if (configs.empty())
      throw ConfigInvalid("config selects no experiment for kind '" + kind + "'" +
                          (opt.experiment_id.empty() ? "" : " and id '" + opt.experiment_id + "'"));
  } else {
    configs = default_experiments(kind);
    if (!opt.experiment_id.empty()) {
      std::erase_if(configs, [&](const auto& c) { return c.id != opt.experiment_id; });
      if (configs.empty()) throw ConfigInvalid("no default experiment named " + opt.experiment_id);
    }
  }
  for (auto& c : configs) apply_overrides(c, opt);

  Json out;
  out["schema"] = 1;
  Json reports = Json::array();
  bool all_pass = true;
  for (const auto& c : configs) {
    Report rep = run_experiment(c);
    all_pass = all_pass && rep.pass;
    reports.push_back(rep.to_json());
    std::cerr << (rep.pass ? "[PASS] " : "[FAIL] ") << c.id << " (" << rep.checks.size()
              << " checks, " << rep.wall_ms << " ms)\n";
  }
  out["reports"] = reports;
  out["pass"] = all_pass;

  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path);
    if (!f) throw ConfigInvalid("cannot write " + opt.out_path);
    f << out.dump(2) << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "padiclie: exact-arithmetic workbench for split semisimple Lie theory over p-adic "
      "coefficient rings (PBW straightening, highest-weight modules, completed group rings, "
      "finite smash products)"};
  app.require_subcommand(1);

  CliOptions opt;
  const std::vector<std::string> kinds = {"rootdata",     "lie-check", "pbw-props", "center",
                                          "verma",        "torus",     "grid",      "injectivity",
                                          "faithfulness", "smash",     "theta-lambda", "all"};
  std::string chosen;
  for (const auto& k : kinds) {
    auto* sub = app.add_subcommand(k, "run the " + k + " verification experiments");
    sub->callback([&chosen, k]() { chosen = k; });
    sub->add_option("--config", opt.config_path, "experiment config JSON");
    sub->add_option("--experiment", opt.experiment_id, "experiment id to select");
    sub->add_option("--out", opt.out_path, "report output path (stdout when absent)");
    sub->add_option("--jobs", opt.jobs, "worker threads (0 = library default, 1 = serial)");
    auto* seed = sub->add_option("--seed", opt.seed, "seed for randomized sweeps");
    sub->callback([&opt, seed, &chosen, k]() {
      chosen = k;
      opt.have_seed = seed->count() > 0;
    });
    sub->add_option("--type", opt.type_label, "root-system label (A1..A4, B2, C3, D4, G2, all)");
    sub->add_option("--p", opt.p, "odd prime");
    sub->add_option("--n", opt.deformation, "deformation parameter");
    sub->add_option("--D", opt.degree_bound, "degree / truncation bound");
    sub->add_option("--N,--M", opt.precision, "precision exponent");
    sub->add_option("--A", opt.alpha_bound, "group-side degree bound");
    sub->add_option("--B", opt.beta_bound, "module-side degree bound");
    sub->add_option("--mu-box", opt.mu_box, "torus eigenvector box side");
    sub->add_option("--count", opt.count, "randomized sweep size");
    sub->add_option("--group", opt.group_preset, "uniform group preset (abelian, heisenberg)");
  }

  CLI11_PARSE(app, argc, argv);
  try {
    return run_kind(chosen, opt);
  } catch (const ConfigInvalid& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
