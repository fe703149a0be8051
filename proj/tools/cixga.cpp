#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cixga/errors.hpp"
#include "cixga/experiment.hpp"

namespace {

struct Overrides {
  std::string config_path;
  std::string out;
  std::size_t runs = 0;
  std::uint64_t seed = 0;
  std::size_t workers = 0;
  std::string function;
  std::size_t dimension = 0;
  std::string op;
  std::size_t budget = 0;
  std::vector<std::string> learn;
  std::vector<std::string> test;
  std::vector<std::string> methods;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "INI experiment config")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_option("--runs", o.runs, "Number of seeded runs")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Base seed; run k uses seed + k");
  cmd->add_option("--workers", o.workers, "Concurrent runs")
      ->check(CLI::PositiveNumber);
}

void add_problem(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--function", o.function, "Benchmark name");
  cmd->add_option("--dimension", o.dimension, "Problem dimension")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget", o.budget, "Fitness evaluations per run")
      ->check(CLI::PositiveNumber);
}

cixga::ExperimentConfig resolve(CLI::App* cmd, const Overrides& o) {
  cixga::ExperimentConfig c =
      o.config_path.empty() ? cixga::ExperimentConfig{}
                            : cixga::load_config(o.config_path);
  const auto given = [cmd](const char* name) { return cmd->count(name) > 0; };
  if (given("--out")) c.out_dir = o.out;
  if (given("--runs")) c.runs = o.runs;
  if (given("--seed")) c.base_seed = o.seed;
  if (given("--workers")) c.workers = o.workers;
  if (cmd->get_option_no_throw("--function") && given("--function")) {
    c.benchmark.function = o.function;
  }
  if (cmd->get_option_no_throw("--dimension") && given("--dimension")) {
    c.benchmark.dimension = o.dimension;
  }
  if (cmd->get_option_no_throw("--operator") && given("--operator")) {
    c.crossover = o.op;
  }
  if (cmd->get_option_no_throw("--budget") && given("--budget")) {
    if (cmd->get_name() == "eda") {
      c.eda.eval_budget = o.budget;
    } else if (cmd->get_name() == "ensemble") {
      c.ensemble.budget = o.budget;
    } else {
      c.ga.eval_budget = o.budget;
    }
  }
  if (cmd->get_option_no_throw("--learn") && given("--learn")) {
    c.ensemble.learn_files = o.learn;
  }
  if (cmd->get_option_no_throw("--test") && given("--test")) {
    c.ensemble.test_files = o.test;
  }
  if (cmd->get_option_no_throw("--methods") && given("--methods")) {
    c.ensemble.methods = o.methods;
  }
  c.validate();
  return c;
}

void print_summary(const cixga::CommandResult& r) {
  for (const auto& row : r.summary) {
    fmt::print("{:<12} {:<6} {:<40} mean={:.4e} sd={:.4e} best={:.4e}\n",
               row.function, row.op, row.params, row.mean, row.stddev, row.best);
  }
  fmt::print("wrote {} file(s)\n", r.files.size());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real-coded GA experiments with confidence-interval crossover"};
  app.require_subcommand(1);
  Overrides o;

  auto* run = app.add_subcommand("run", "Repeated runs of one operator");
  auto* sweep = app.add_subcommand("sweep", "CIXL2 n x confidence grid");
  auto* compare = app.add_subcommand("compare", "Compare crossover operators");
  auto* eda = app.add_subcommand("eda", "UMDAc against the configured GA");
  auto* ens = app.add_subcommand("ensemble", "Weight a classifier ensemble");

  for (auto* cmd : {run, sweep, compare, eda, ens}) add_common(cmd, o);
  for (auto* cmd : {run, sweep, compare, eda}) add_problem(cmd, o);
  for (auto* cmd : {run, eda}) {
    cmd->add_option("--operator", o.op, "Crossover spec, e.g. blx(0.5)");
  }
  ens->add_option("--budget", o.budget, "GA evaluations for the weight search")
      ->check(CLI::PositiveNumber);
  ens->add_option("--learn", o.learn, "Learning prediction file (repeatable)");
  ens->add_option("--test", o.test, "Test prediction file (repeatable)");
  ens->add_option("--methods", o.methods, "Subset of bem gem ga");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "cixga: %s\n", e.what());
    return 2;
  }

  try {
    if (run->parsed()) print_summary(cixga::cmd_run(resolve(run, o)));
    if (sweep->parsed()) print_summary(cixga::cmd_sweep(resolve(sweep, o)));
    if (compare->parsed()) print_summary(cixga::cmd_compare(resolve(compare, o)));
    if (eda->parsed()) print_summary(cixga::cmd_eda(resolve(eda, o)));
    if (ens->parsed()) {
      const auto report = cixga::cmd_ensemble(resolve(ens, o));
      for (const auto& r : report.rows) {
        fmt::print("{:<16} {:<4} learn={:.4f} test={:.4f}{}\n", r.dataset,
                   r.method, r.learning_accuracy, r.test_accuracy,
                   r.note.empty() ? "" : "  (" + r.note + ")");
      }
      fmt::print("wrote {} file(s)\n", report.files.size());
    }
  } catch (const cixga::ConfigError& e) {
    std::fprintf(stderr, "cixga: config error: %s\n", e.what());
    return 2;
  } catch (const cixga::ParseError& e) {
    std::fprintf(stderr, "cixga: parse error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "cixga: error: %s\n", e.what());
    return 1;
  }
  return 0;
}
