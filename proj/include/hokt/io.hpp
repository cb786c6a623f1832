#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hokt/benchgen.hpp"
#include "hokt/graph.hpp"
#include "hokt/transfer.hpp"

namespace hokt {

const char* to_string(RunMode m);
RunMode run_mode_from_string(const std::string& s);

// A batch of independent runs over one dataset: every algorithm in
// `algorithms` is run `runs` times with seeds base_seed .. base_seed+runs-1.
struct ExperimentConfig {
  std::string dataset;  // directory path or generator spec string
  std::vector<RunMode> algorithms{RunMode::hokt};
  std::uint32_t runs = 30;
  std::uint64_t base_seed = 0;
  HoktConfig hokt;
  std::string output_dir = "out";
  std::uint32_t workers = 1;
};

struct ResultCell {
  RunMode algorithm = RunMode::hokt;
  std::uint32_t run = 0;  // seed = base_seed + run
  TimestepResult result;
  double wall_ms = 0.0;
};

// Complete grid ordered by (algorithm position, run, timestep).
struct ResultsTable {
  std::vector<ResultCell> cells;
};

// --- dataset files ------------------------------------------------------
//
// A dataset directory holds t1.edges .. tT.edges ("u v" per line, '#'
// comments allowed) with optional matching t<k>.labels ("node label" per
// line) and a free-form `meta` file.

DynamicNetwork load_network(const std::string& dir);

void save_network(const DynamicNetwork& net, const std::string& dir,
                  const std::string& meta = "");

// "synfix:z_out=5,timesteps=10,seed=7" / "events:kind=merge_split,seed=3";
// both accept an optional stride=K for great-change subsampling.
bool is_generator_spec(const std::string& s);
DynamicNetwork generate_from_spec(const std::string& spec);

// Loads a directory or generates from a spec string.
DynamicNetwork resolve_dataset(const std::string& dataset);

// --- experiment config ---------------------------------------------------

ExperimentConfig parse_experiment_text(const std::string& text);
ExperimentConfig parse_experiment_file(const std::string& path);

// --- execution and serialization ------------------------------------------

ResultsTable run_experiment(const ExperimentConfig& cfg);
ResultsTable run_experiment_on(const DynamicNetwork& net, const ExperimentConfig& cfg);

std::string results_csv(const ResultsTable& table);
std::string timings_csv(const ResultsTable& table);
std::string summary_json(const ResultsTable& table, const ExperimentConfig& cfg);
std::string summary_json(const ResultsTable& table);  // without config context

// Rebuilds a table from results_csv output (used by the report subcommand).
ResultsTable parse_results_csv(const std::string& text);

std::string similarity_csv(const DynamicNetwork& net);
void emit_similarity(const DynamicNetwork& net, const std::string& out_path);

// Resolves the dataset, runs the experiment, and writes results.csv,
// summary.json, timings.csv (informational, excluded from the determinism
// contract) and mapping.tsv into cfg.output_dir.
void execute_run(const ExperimentConfig& cfg);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace hokt
