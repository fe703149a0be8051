#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cixga/benchmarks.hpp"
#include "cixga/eda.hpp"
#include "cixga/ensemble.hpp"
#include "cixga/ga.hpp"

namespace cixga {

struct BenchmarkSpec {
  std::string function = "sphere";
  std::size_t dimension = 30;
  std::uint64_t data_seed = 0;   // Fletcher-Powell / default Langerman data
  std::string langerman_file;    // empty: seeded default data

  Benchmark build() const;
};

struct SweepGrid {
  std::vector<std::size_t> n_best = {5, 10, 30, 60, 90};
  std::vector<double> confidence = {0.70, 0.90, 0.95, 0.99};
};

struct EnsembleSettings {
  std::vector<std::string> learn_files;
  std::vector<std::string> test_files;
  std::vector<std::string> methods = {"bem", "gem", "ga"};
  std::size_t budget = 20000;
};

struct ExperimentConfig {
  BenchmarkSpec benchmark;
  std::string crossover = "cixl2(5,0.7)";
  GAConfig ga;
  /// Unset: MGG for operators that prefer it, generational otherwise.
  std::optional<UpdateModel> model;
  EDAConfig eda;
  std::size_t runs = 30;
  std::uint64_t base_seed = 1;
  std::size_t workers = 1;
  std::string out_dir = "out";
  SweepGrid sweep;
  std::vector<std::string> compare = {"cixl2(5,0.7)", "blx(0.3)", "blx(0.5)",
                                      "sbx(2)",       "sbx(5)",   "fuzzy(0.5)",
                                      "undx"};
  EnsembleSettings ensemble;

  /// Checks registry names and numeric ranges; throws ConfigError.
  void validate() const;
};

/// INI-style text: [benchmark] [operator] [ga] [eda] [run] [output] [sweep]
/// [compare] [ensemble] sections with key = value entries. Unknown sections
/// or keys are errors. Throws ConfigError or ParseError.
ExperimentConfig parse_config(std::string_view text,
                              const std::string& source = "<config>");
ExperimentConfig load_config(const std::string& path);

/// Summary statistics of final best objectives over repeated runs.
struct SummaryRow {
  std::string function;
  std::string op;
  std::string params;
  std::size_t runs = 0;
  double mean = 0.0;
  double stddev = 0.0;  // n - 1 denominator, 0 for a single run
  double best = 0.0;
  double worst = 0.0;
};

SummaryRow summarize(std::string function, std::string op, std::string params,
                     std::span<const double> finals);

/// Runs `count` independent jobs on up to `workers` threads. Results are
/// addressed by index, so output order never depends on completion order.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& job);

/// Runs config.runs seeded GA runs (seed = base_seed + k) of one operator.
std::vector<RunRecord> run_repeated(const ExperimentConfig& config,
                                    const Benchmark& benchmark,
                                    const Crossover& prototype,
                                    UpdateModel model);

std::string format_number(double v);
std::string trace_csv(std::span<const TracePoint> trace);
std::string summary_csv(std::span<const SummaryRow> rows);
/// Parses a trace CSV back; throws ParseError on malformed input.
std::vector<TracePoint> parse_trace_csv(std::string_view text,
                                        const std::string& source = "<trace>");
/// Filename-safe label such as "blx_alpha0.5".
std::string operator_label(const Crossover& op);

struct CommandResult {
  std::vector<SummaryRow> summary;
  std::vector<std::filesystem::path> files;
};

CommandResult cmd_run(const ExperimentConfig& config);
CommandResult cmd_sweep(const ExperimentConfig& config);
CommandResult cmd_compare(const ExperimentConfig& config);
/// UMDAc against the configured GA operator under the same budget.
CommandResult cmd_eda(const ExperimentConfig& config);

struct EnsembleRow {
  std::string dataset;
  std::string method;
  double learning_accuracy = 0.0;
  double test_accuracy = 0.0;
  WeightVector weights;
  std::string note;
};

struct EnsembleReport {
  std::vector<EnsembleRow> rows;
  std::vector<std::string> methods;
  std::vector<std::vector<WinDrawLoss>> wdl;  // on test accuracy
  std::vector<std::filesystem::path> files;
};

struct EnsembleDataset {
  std::string name;
  PredictionSet learning;
  PredictionSet test;
};

/// Evaluates each method on every dataset; GEM falls back to equal weights
/// when its correlation matrix is collinear.
EnsembleReport evaluate_ensemble(std::span<const EnsembleDataset> datasets,
                                 std::span<const std::string> methods,
                                 std::size_t ga_budget, std::uint64_t seed);

EnsembleReport cmd_ensemble(const ExperimentConfig& config);

}  // namespace cixga
