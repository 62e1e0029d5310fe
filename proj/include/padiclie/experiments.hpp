#ifndef PADICLIE_EXPERIMENTS_HPP
#define PADICLIE_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "padiclie/scalar.hpp"

namespace padiclie {

using Json = nlohmann::ordered_json;

/// One verification line: which statement is instantiated, with which
/// parameters, what was observed, and whether it held. Scalars are always
/// emitted as exact rational strings.
struct CheckLine {
  std::string statement_id;
  Json params;
  Json witnesses;
  bool pass = false;
};

struct Report {
  std::string experiment;
  std::string command;
  Json parameters;
  std::vector<CheckLine> checks;
  bool pass = true;
  long wall_ms = 0;

  void add(CheckLine line);
  Json to_json(bool include_timing = true) const;
};

/// Named, reproducible experiment configuration; every field that a
/// runner reads is explicit here so identical configs give identical
/// reports (timing aside).
struct ExperimentConfig {
  std::string id;
  std::string kind;           // rootdata | lie-check | pbw-props | center | verma |
                              // torus | grid | injectivity | faithfulness | smash |
                              // theta-lambda
  std::string type_label = "A1";
  unsigned long p = 5;
  int precision = 6;          // N / M style exponent
  int deformation = 0;        // n
  long degree_bound = 4;      // D
  int alpha_bound = 2;        // A
  int beta_bound = 2;         // B
  int mu_box = 4;             // torus box side
  int count = 100;            // randomized sweep size
  std::uint64_t seed = 1;
  std::string group_preset = "abelian";  // abelian | heisenberg | custom
  int group_rank = 1;
  Json group_data;                        // {p, rank, brackets: [[i,j,k,coeff],..]}
  Json group_table;                       // finite-group multiplication table
  std::vector<std::vector<Rat>> weights;  // lambda values on p^n h_i
};

ExperimentConfig experiment_from_json(const Json& j);
std::vector<ExperimentConfig> experiments_from_config_file(const std::string& path);
std::vector<ExperimentConfig> default_experiments(const std::string& kind);

Report run_experiment(const ExperimentConfig& cfg);

}  // namespace padiclie

#endif
