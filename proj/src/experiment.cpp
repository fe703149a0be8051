#include "cixga/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "cixga/errors.hpp"
#include "line_reader.hpp"

namespace cixga {
namespace fs = std::filesystem;
namespace {

std::vector<std::string> split(std::string_view s, std::string_view seps) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (true) {
    i = s.find_first_not_of(seps, i);
    if (i == std::string_view::npos) break;
    std::size_t j = s.find_first_of(seps, i);
    if (j == std::string_view::npos) j = s.size();
    out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Splits on whitespace outside parentheses, so "cixl2(5, 0.7) blx(0.5)"
// yields two operator specs.
std::vector<std::string> split_specs(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == ' ' || ch == '\t')) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

template <typename T>
T parse_value(const std::string& text, const std::string& key) {
  T v{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw ConfigError("bad value '" + text + "' for " + key);
  }
  return v;
}

UpdateModel parse_model(const std::string& s) {
  if (s == "generational") return UpdateModel::kGenerational;
  if (s == "mgg") return UpdateModel::kMgg;
  throw ConfigError("unknown update model '" + s +
                    "'; valid names: generational, mgg, auto");
}

std::string_view model_name(UpdateModel m) {
  return m == UpdateModel::kMgg ? "mgg" : "generational";
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

UpdateModel resolve_model(const ExperimentConfig& config, const Crossover& op) {
  if (config.model) return *config.model;
  return op.prefers_mgg() ? UpdateModel::kMgg : UpdateModel::kGenerational;
}

std::string run_params(const Crossover& op, UpdateModel model) {
  return fmt::format("model={};{}", model_name(model), op.params());
}

std::vector<double> finals(std::span<const RunRecord> runs) {
  std::vector<double> out;
  out.reserve(runs.size());
  for (const auto& r : runs) out.push_back(r.best.value());
  return out;
}

fs::path trace_path(const ExperimentConfig& config, const Benchmark& bm,
                    const std::string& label, std::size_t k) {
  return fs::path(config.out_dir) / "traces" /
         fmt::format("{}_{}_run{:03}.csv", bm.name(), label, k + 1);
}

std::vector<TracePoint> mean_trace(std::span<const RunRecord> runs) {
  std::size_t len = runs.front().trace.size();
  for (const auto& r : runs) len = std::min(len, r.trace.size());
  std::vector<TracePoint> out(len);
  const double n = static_cast<double>(runs.size());
  for (std::size_t g = 0; g < len; ++g) {
    out[g].generation = runs.front().trace[g].generation;
    out[g].evaluations = runs.front().trace[g].evaluations;
    for (const auto& r : runs) {
      out[g].best += r.trace[g].best / n;
      out[g].mean += r.trace[g].mean / n;
    }
  }
  return out;
}

// Shared body of run/compare/eda for one GA operator: runs, writes traces.
SummaryRow run_operator(const ExperimentConfig& config, const Benchmark& bm,
                        const Crossover& op, UpdateModel model,
                        std::vector<fs::path>& files, bool write_mean_trace) {
  const auto runs = run_repeated(config, bm, op, model);
  const std::string label = operator_label(op);
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const auto path = trace_path(config, bm, label, k);
    write_file(path, trace_csv(runs[k].trace));
    files.push_back(path);
  }
  if (write_mean_trace) {
    const auto path = fs::path(config.out_dir) /
                      fmt::format("mean_trace_{}_{}.csv", bm.name(), label);
    write_file(path, trace_csv(mean_trace(runs)));
    files.push_back(path);
  }
  const auto f = finals(runs);
  return summarize(std::string(bm.name()), op.name(), run_params(op, model), f);
}

std::string fmt_accuracy(double v) { return fmt::format("{:.6f}", v); }

}  // namespace

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

Benchmark BenchmarkSpec::build() const {
  const Function f = parse_function(function);
  if (f == Function::kLangerman && !langerman_file.empty()) {
    auto data = load_langerman(langerman_file);
    if (data.dimension != dimension) {
      throw ConfigError(fmt::format(
          "Langerman file '{}' has dimension {}, config asks for {}",
          langerman_file, data.dimension, dimension));
    }
    return Benchmark::langerman(std::move(data));
  }
  return Benchmark::make(f, dimension, data_seed);
}

void ExperimentConfig::validate() const {
  parse_function(benchmark.function);
  if (benchmark.dimension < 1) throw ConfigError("dimension must be >= 1");
  make_crossover(crossover, benchmark.dimension);
  for (const auto& spec : compare) make_crossover(spec, benchmark.dimension);
  ga.validate();
  if (runs < 1) throw ConfigError("runs must be >= 1");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (sweep.n_best.empty() || sweep.confidence.empty()) {
    throw ConfigError("sweep grid must not be empty");
  }
  for (auto n : sweep.n_best) {
    if (n < 2) throw ConfigError("sweep n_best values must be >= 2");
  }
  for (auto c : sweep.confidence) {
    if (!(c > 0.0 && c < 1.0)) {
      throw ConfigError("sweep confidence values must lie in (0, 1)");
    }
  }
  for (const auto& m : ensemble.methods) {
    if (m != "bem" && m != "gem" && m != "ga") {
      throw ConfigError("unknown ensemble method '" + m +
                        "'; valid names: bem, gem, ga");
    }
  }
  if (ensemble.learn_files.size() != ensemble.test_files.size()) {
    throw ConfigError("ensemble needs one test file per learning file");
  }
}

ExperimentConfig parse_config(std::string_view text, const std::string& source) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  {
    std::istringstream in{std::string(text)};
    try {
      pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
      throw ParseError(source, e.line(), 1, e.message());
    }
  }

  ExperimentConfig c;
  std::map<std::string, std::string> op_keys;
  const std::map<std::string, std::set<std::string>> allowed = {
      {"benchmark", {"function", "dimension", "data_seed", "langerman_file"}},
      {"operator",
       {"name", "n_best", "confidence", "alpha", "eta", "d", "sigma_xi",
        "sigma_eta"}},
      {"ga",
       {"population", "crossover_prob", "mutation_prob", "mutation_b", "model",
        "mgg_lambda", "budget"}},
      {"eda", {"population", "selection", "budget"}},
      {"run", {"runs", "seed", "workers"}},
      {"output", {"dir"}},
      {"sweep", {"n_best", "confidence"}},
      {"compare", {"operators"}},
      {"ensemble", {"learn", "test", "methods", "budget"}},
  };

  for (const auto& [section, body] : tree) {
    const auto it = allowed.find(section);
    if (it == allowed.end()) {
      if (body.empty()) {
        throw ConfigError(source + ": key '" + section + "' outside a section");
      }
      throw ConfigError(source + ": unknown section [" + section + "]");
    }
    for (const auto& [key, node] : body) {
      if (!it->second.count(key)) {
        throw ConfigError(source + ": unknown key '" + key + "' in [" + section +
                          "]");
      }
      const std::string value = node.get_value<std::string>();
      const std::string where = source + ": " + section + "." + key;
      const auto as_size = [&] { return parse_value<std::size_t>(value, where); };
      const auto as_u64 = [&] { return parse_value<std::uint64_t>(value, where); };
      const auto as_double = [&] { return parse_value<double>(value, where); };

      if (section == "benchmark") {
        if (key == "function") c.benchmark.function = value;
        if (key == "dimension") c.benchmark.dimension = as_size();
        if (key == "data_seed") c.benchmark.data_seed = as_u64();
        if (key == "langerman_file") c.benchmark.langerman_file = value;
      } else if (section == "operator") {
        op_keys[key] = value;
      } else if (section == "ga") {
        if (key == "population") c.ga.population_size = as_size();
        if (key == "crossover_prob") c.ga.crossover_prob = as_double();
        if (key == "mutation_prob") c.ga.mutation_prob = as_double();
        if (key == "mutation_b") c.ga.mutation_b = as_double();
        if (key == "mgg_lambda") c.ga.mgg_lambda = as_size();
        if (key == "budget") c.ga.eval_budget = as_size();
        if (key == "model") {
          if (value == "auto") {
            c.model.reset();
          } else {
            c.model = parse_model(value);
          }
        }
      } else if (section == "eda") {
        if (key == "population") c.eda.population_size = as_size();
        if (key == "selection") c.eda.selection_size = as_size();
        if (key == "budget") c.eda.eval_budget = as_size();
      } else if (section == "run") {
        if (key == "runs") c.runs = as_size();
        if (key == "seed") c.base_seed = as_u64();
        if (key == "workers") c.workers = as_size();
      } else if (section == "output") {
        c.out_dir = value;
      } else if (section == "sweep") {
        if (key == "n_best") {
          c.sweep.n_best.clear();
          for (const auto& v : split(value, ", \t")) {
            c.sweep.n_best.push_back(parse_value<std::size_t>(v, where));
          }
        }
        if (key == "confidence") {
          c.sweep.confidence.clear();
          for (const auto& v : split(value, ", \t")) {
            c.sweep.confidence.push_back(parse_value<double>(v, where));
          }
        }
      } else if (section == "compare") {
        c.compare = split_specs(value);
      } else if (section == "ensemble") {
        if (key == "learn") c.ensemble.learn_files = split(value, " \t");
        if (key == "test") c.ensemble.test_files = split(value, " \t");
        if (key == "methods") c.ensemble.methods = split(value, ", \t");
        if (key == "budget") c.ensemble.budget = as_size();
      }
    }
  }

  if (!op_keys.empty()) {
    const std::string name = op_keys.count("name") ? op_keys["name"] : "cixl2";
    const std::map<std::string, std::vector<std::string>> params = {
        {"cixl2", {"n_best", "confidence"}},
        {"blx", {"alpha"}},
        {"sbx", {"eta"}},
        {"fuzzy", {"d"}},
        {"undx", {"sigma_xi", "sigma_eta"}},
    };
    const auto it = params.find(name);
    if (it == params.end()) make_crossover(name, c.benchmark.dimension);  // throws
    for (const auto& [key, value] : op_keys) {
      if (key == "name") continue;
      if (std::find(it->second.begin(), it->second.end(), key) == it->second.end()) {
        throw ConfigError(source + ": key '" + key +
                          "' does not apply to operator '" + name + "'");
      }
    }
    // Positional arguments; a trailing default can be omitted, but not a gap.
    std::vector<std::string> args;
    for (const auto& key : it->second) {
      if (op_keys.count(key)) {
        args.push_back(op_keys[key]);
      } else {
        args.emplace_back();
      }
    }
    while (!args.empty() && args.back().empty()) args.pop_back();
    if (std::find(args.begin(), args.end(), std::string{}) != args.end()) {
      if (name == "cixl2") {
        if (args[0].empty()) args[0] = "5";
      } else if (name == "undx") {
        if (args[0].empty()) args[0] = "0.5";
      }
    }
    std::string spec = name;
    if (!args.empty()) {
      spec += "(";
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) spec += ",";
        spec += args[i];
      }
      spec += ")";
    }
    c.crossover = spec;
  }

  c.validate();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

// ---------------------------------------------------------------------------
// Statistics, scheduling, CSV
// ---------------------------------------------------------------------------

SummaryRow summarize(std::string function, std::string op, std::string params,
                     std::span<const double> values) {
  SummaryRow row;
  row.function = std::move(function);
  row.op = std::move(op);
  row.params = std::move(params);
  row.runs = values.size();
  if (values.empty()) return row;
  double sum = 0.0;
  for (double v : values) sum += v;
  row.mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - row.mean) * (v - row.mean);
  row.stddev = values.size() > 1
                   ? std::sqrt(ss / static_cast<double>(values.size() - 1))
                   : 0.0;
  row.best = *std::min_element(values.begin(), values.end());
  row.worst = *std::max_element(values.begin(), values.end());
  return row;
}

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& job) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            job(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

std::vector<RunRecord> run_repeated(const ExperimentConfig& config,
                                    const Benchmark& benchmark,
                                    const Crossover& prototype,
                                    UpdateModel model) {
  std::vector<RunRecord> runs(config.runs);
  const Objective objective = benchmark.objective();
  parallel_for(config.runs, config.workers, [&](std::size_t k) {
    GAConfig ga = config.ga;
    ga.seed = config.base_seed + k;
    ga.update_model = model;
    auto op = prototype.clone();
    runs[k] = run_ga(ga, benchmark.domain(), objective, *op);
  });
  return runs;
}

std::string format_number(double v) { return fmt::format("{:.16e}", v); }

std::string trace_csv(std::span<const TracePoint> trace) {
  std::string out = "generation,evaluations,best_objective,mean_objective\n";
  for (const auto& tp : trace) {
    out += fmt::format("{},{},{},{}\n", tp.generation, tp.evaluations,
                       format_number(tp.best), format_number(tp.mean));
  }
  return out;
}

std::string summary_csv(std::span<const SummaryRow> rows) {
  std::string out = "function,operator,params,runs,mean,stddev,best,worst\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", csv_field(r.function),
                       csv_field(r.op), csv_field(r.params), r.runs,
                       format_number(r.mean), format_number(r.stddev),
                       format_number(r.best), format_number(r.worst));
  }
  return out;
}

std::vector<TracePoint> parse_trace_csv(std::string_view text,
                                        const std::string& source) {
  const auto nl = text.find('\n');
  const std::string_view header = text.substr(0, nl);
  if (header != "generation,evaluations,best_objective,mean_objective") {
    throw ParseError(source, 1, 1, "unexpected trace header");
  }
  std::vector<TracePoint> out;
  std::size_t line_no = 1;
  std::string body(nl == std::string_view::npos ? "" : text.substr(nl + 1));
  std::replace(body.begin(), body.end(), ',', ' ');
  detail::LineReader reader(body, source);
  while (!reader.at_end()) {
    const auto row = reader.row(4, "trace row");
    ++line_no;
    TracePoint tp;
    tp.generation = static_cast<std::size_t>(row[0]);
    tp.evaluations = static_cast<std::size_t>(row[1]);
    tp.best = row[2];
    tp.mean = row[3];
    out.push_back(tp);
  }
  return out;
}

std::string operator_label(const Crossover& op) {
  std::string label = op.name();
  for (const auto& part : split(op.params(), ";")) {
    label += "_";
    for (char ch : part) {
      if (ch == '=') continue;
      label += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' ||
                ch == '-')
                   ? ch
                   : '_';
    }
  }
  return label;
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

CommandResult cmd_run(const ExperimentConfig& config) {
  config.validate();
  const Benchmark bm = config.benchmark.build();
  const auto op = make_crossover(config.crossover, bm.dimension());
  CommandResult result;
  result.summary.push_back(run_operator(config, bm, *op, resolve_model(config, *op),
                                        result.files, false));
  const auto path = fs::path(config.out_dir) / "summary.csv";
  write_file(path, summary_csv(result.summary));
  result.files.push_back(path);
  return result;
}

CommandResult cmd_sweep(const ExperimentConfig& config) {
  config.validate();
  for (auto n : config.sweep.n_best) {
    if (n > config.ga.population_size) {
      throw ConfigError(fmt::format("sweep n_best {} exceeds the population size {}",
                                    n, config.ga.population_size));
    }
  }
  const Benchmark bm = config.benchmark.build();
  CommandResult result;
  for (std::size_t n : config.sweep.n_best) {
    for (double conf : config.sweep.confidence) {
      const Cixl2Crossover op({n, conf});
      const UpdateModel model = config.model.value_or(UpdateModel::kGenerational);
      const auto runs = run_repeated(config, bm, op, model);
      const auto f = finals(runs);
      result.summary.push_back(summarize(std::string(bm.name()), op.name(),
                                         run_params(op, model), f));
    }
  }
  const auto path = fs::path(config.out_dir) / "summary.csv";
  write_file(path, summary_csv(result.summary));
  result.files.push_back(path);
  return result;
}

CommandResult cmd_compare(const ExperimentConfig& config) {
  config.validate();
  const Benchmark bm = config.benchmark.build();
  CommandResult result;
  for (const auto& spec : config.compare) {
    const auto op = make_crossover(spec, bm.dimension());
    const UpdateModel model =
        op->prefers_mgg() ? UpdateModel::kMgg
                          : config.model.value_or(UpdateModel::kGenerational);
    result.summary.push_back(
        run_operator(config, bm, *op, model, result.files, true));
  }
  const auto path = fs::path(config.out_dir) / "summary.csv";
  write_file(path, summary_csv(result.summary));
  result.files.push_back(path);
  return result;
}

CommandResult cmd_eda(const ExperimentConfig& config) {
  config.validate();
  config.eda.validate();
  const Benchmark bm = config.benchmark.build();
  const Objective objective = bm.objective();
  CommandResult result;

  std::vector<RunRecord> runs(config.runs);
  parallel_for(config.runs, config.workers, [&](std::size_t k) {
    EDAConfig eda = config.eda;
    eda.seed = config.base_seed + k;
    runs[k] = run_umdac(eda, bm.domain(), objective);
  });
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const auto path = trace_path(config, bm, "umdac", k);
    write_file(path, trace_csv(runs[k].trace));
    result.files.push_back(path);
  }
  const auto path_mean =
      fs::path(config.out_dir) / fmt::format("mean_trace_{}_umdac.csv", bm.name());
  write_file(path_mean, trace_csv(mean_trace(runs)));
  result.files.push_back(path_mean);
  result.summary.push_back(summarize(
      std::string(bm.name()), "umdac",
      fmt::format("population={};selection={}", config.eda.population_size,
                  config.eda.selection_size),
      finals(runs)));

  ExperimentConfig ga_config = config;
  ga_config.ga.eval_budget = config.eda.eval_budget;
  const auto op = make_crossover(config.crossover, bm.dimension());
  result.summary.push_back(run_operator(ga_config, bm, *op,
                                        resolve_model(config, *op), result.files,
                                        true));

  const auto path = fs::path(config.out_dir) / "summary.csv";
  write_file(path, summary_csv(result.summary));
  result.files.push_back(path);
  return result;
}

EnsembleReport evaluate_ensemble(std::span<const EnsembleDataset> datasets,
                                 std::span<const std::string> methods,
                                 std::size_t ga_budget, std::uint64_t seed) {
  EnsembleReport report;
  report.methods.assign(methods.begin(), methods.end());
  std::vector<std::vector<double>> table;
  for (const auto& ds : datasets) {
    if (ds.learning.networks() != ds.test.networks() ||
        ds.learning.classes() != ds.test.classes()) {
      throw ConfigError("dataset '" + ds.name +
                        "': learning and test files disagree on shape");
    }
    std::vector<double> row;
    for (const auto& method : methods) {
      EnsembleRow r;
      r.dataset = ds.name;
      r.method = method;
      if (method == "bem") {
        r.weights = bem_weights(ds.learning.networks());
      } else if (method == "gem") {
        try {
          r.weights = gem_weights(ds.learning);
        } catch (const CollinearityError& e) {
          r.weights = bem_weights(ds.learning.networks());
          r.note = "collinear; equal weights used";
        } catch (const std::invalid_argument&) {
          r.weights = bem_weights(ds.learning.networks());
          r.note = "single network; equal weights used";
        }
      } else if (method == "ga") {
        EnsembleGAOptions opts;
        opts.eval_budget = ga_budget;
        opts.seed = seed;
        r.weights = ga_weights(ds.learning, opts).weights;
      } else {
        throw ConfigError("unknown ensemble method '" + method + "'");
      }
      r.learning_accuracy = accuracy(ds.learning, r.weights.weights);
      r.test_accuracy = accuracy(ds.test, r.weights.weights);
      row.push_back(r.test_accuracy);
      report.rows.push_back(std::move(r));
    }
    table.push_back(std::move(row));
  }
  report.wdl = win_draw_loss(table);
  return report;
}

EnsembleReport cmd_ensemble(const ExperimentConfig& config) {
  config.validate();
  const auto& es = config.ensemble;
  if (es.learn_files.empty()) {
    throw ConfigError("ensemble needs at least one learning/test file pair");
  }
  std::vector<EnsembleDataset> datasets;
  for (std::size_t i = 0; i < es.learn_files.size(); ++i) {
    datasets.push_back({fs::path(es.learn_files[i]).stem().string(),
                        load_predictions(es.learn_files[i]),
                        load_predictions(es.test_files[i])});
  }
  auto report = evaluate_ensemble(datasets, es.methods, es.budget, config.base_seed);

  std::string acc = "dataset,method,learning_accuracy,test_accuracy,weights,note\n";
  for (const auto& r : report.rows) {
    std::string w;
    for (double v : r.weights.weights) {
      if (!w.empty()) w += ' ';
      w += fmt::format("{:.6g}", v);
    }
    acc += fmt::format("{},{},{},{},{},{}\n", csv_field(r.dataset), r.method,
                       fmt_accuracy(r.learning_accuracy),
                       fmt_accuracy(r.test_accuracy), csv_field(w),
                       csv_field(r.note));
  }
  std::string wdl = "row_method,column_method,wins,draws,losses\n";
  for (std::size_t r = 0; r < report.methods.size(); ++r) {
    for (std::size_t c = 0; c < report.methods.size(); ++c) {
      const auto& cell = report.wdl[r][c];
      wdl += fmt::format("{},{},{},{},{}\n", report.methods[r], report.methods[c],
                         cell.wins, cell.draws, cell.losses);
    }
  }
  const auto acc_path = fs::path(config.out_dir) / "accuracy.csv";
  const auto wdl_path = fs::path(config.out_dir) / "wdl.csv";
  write_file(acc_path, acc);
  write_file(wdl_path, wdl);
  report.files = {acc_path, wdl_path};
  return report;
}

}  // namespace cixga
