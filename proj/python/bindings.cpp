#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cixga/benchmarks.hpp"
#include "cixga/crossover.hpp"
#include "cixga/eda.hpp"
#include "cixga/ensemble.hpp"
#include "cixga/errors.hpp"
#include "cixga/experiment.hpp"
#include "cixga/ga.hpp"
#include "cixga/interval_stats.hpp"

namespace py = pybind11;
using namespace cixga;

namespace {

py::dict record_dict(const RunRecord& r) {
  py::list trace;
  for (const auto& tp : r.trace) {
    trace.append(py::make_tuple(tp.generation, tp.evaluations, tp.best, tp.mean));
  }
  py::dict d;
  d["trace"] = trace;
  d["best"] = r.best.value();
  d["best_genes"] = r.best.genes;
  d["evaluations"] = r.evaluations;
  d["generations"] = r.generations;
  d["seed"] = r.seed;
  return d;
}

UpdateModel model_from(const std::string& name, const Crossover& op) {
  if (name == "auto") return op.prefers_mgg() ? UpdateModel::kMgg : UpdateModel::kGenerational;
  if (name == "generational") return UpdateModel::kGenerational;
  if (name == "mgg") return UpdateModel::kMgg;
  throw ConfigError("model must be 'auto', 'generational' or 'mgg'");
}

PredictionSet prediction_set(py::array_t<double, py::array::c_style | py::array::forcecast> outputs,
                             const std::vector<std::size_t>& labels) {
  if (outputs.ndim() != 3) {
    throw std::invalid_argument("outputs must have shape (patterns, networks, classes)");
  }
  const auto n = static_cast<std::size_t>(outputs.size());
  std::vector<double> flat(outputs.data(), outputs.data() + n);
  return PredictionSet(outputs.shape(0), outputs.shape(1), outputs.shape(2),
                       std::move(flat), labels);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Real-coded genetic algorithms with confidence-interval crossover";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CollinearityError>(m, "CollinearityError", PyExc_ArithmeticError);

  m.def("t_quantile", &t_quantile, py::arg("df"), py::arg("prob"));
  m.def("t_cdf", &t_cdf, py::arg("q"), py::arg("df"));
  m.def(
      "confidence_interval",
      [](const std::vector<double>& values, double confidence) {
        const auto ci = confidence_interval(values, confidence);
        return py::make_tuple(ci.lower, ci.center, ci.upper);
      },
      py::arg("values"), py::arg("confidence"),
      "Returns (lower, center, upper) of the studentized interval.");

  py::class_<Benchmark>(m, "Benchmark")
      .def(py::init([](const std::string& name, std::size_t dimension,
                       std::uint64_t data_seed) {
             return Benchmark::make(parse_function(name), dimension, data_seed);
           }),
           py::arg("name"), py::arg("dimension") = 30, py::arg("data_seed") = 0)
      .def_property_readonly("name", [](const Benchmark& b) { return std::string(b.name()); })
      .def_property_readonly("dimension", &Benchmark::dimension)
      .def_property_readonly("bounds",
                             [](const Benchmark& b) {
                               std::vector<std::pair<double, double>> out;
                               for (const auto& bd : b.domain().bounds()) {
                                 out.emplace_back(bd.lower, bd.upper);
                               }
                               return out;
                             })
      .def_property_readonly("optimum_point", &Benchmark::optimum_point)
      .def_property_readonly("optimum_value", &Benchmark::optimum_value)
      .def("__call__", [](const Benchmark& b, const std::vector<double>& x) { return b(x); });

  m.def("function_names", [] {
    std::vector<std::string> out;
    for (auto n : function_names()) out.emplace_back(n);
    return out;
  });
  m.def("crossover_names", [] {
    std::vector<std::string> out;
    for (auto n : crossover_names()) out.emplace_back(n);
    return out;
  });

  m.def("cixl2_gene", &cixl2_gene, py::arg("parent_gene"), py::arg("virtual_gene"),
        py::arg("parent_better"), py::arg("r"));
  m.def("sbx_spread", &sbx_spread, py::arg("u"), py::arg("eta"));
  m.def("nonuniform_delta", &nonuniform_delta, py::arg("t"), py::arg("g_max"),
        py::arg("b"), py::arg("y"), py::arg("r"));

  m.def(
      "run_ga",
      [](const std::string& function, const std::string& crossover, std::size_t dimension,
         std::size_t budget, std::size_t population, std::uint64_t seed,
         const std::string& model) {
        const Benchmark bm = Benchmark::make(parse_function(function), dimension);
        auto op = make_crossover(crossover, dimension);
        GAConfig config;
        config.population_size = population;
        config.eval_budget = budget;
        config.seed = seed;
        config.update_model = model_from(model, *op);
        py::gil_scoped_release release;
        const auto rec = run_ga(config, bm.domain(), bm.objective(), *op);
        py::gil_scoped_acquire acquire;
        return record_dict(rec);
      },
      py::arg("function"), py::arg("crossover") = "cixl2(5,0.7)", py::arg("dimension") = 30,
      py::arg("budget") = 300000, py::arg("population") = 100, py::arg("seed") = 1,
      py::arg("model") = "auto");

  m.def(
      "run_umdac",
      [](const std::string& function, std::size_t dimension, std::size_t budget,
         std::size_t population, std::size_t selection, std::uint64_t seed) {
        const Benchmark bm = Benchmark::make(parse_function(function), dimension);
        EDAConfig config{population, selection, budget, seed};
        py::gil_scoped_release release;
        const auto rec = run_umdac(config, bm.domain(), bm.objective());
        py::gil_scoped_acquire acquire;
        return record_dict(rec);
      },
      py::arg("function"), py::arg("dimension") = 30, py::arg("budget") = 300000,
      py::arg("population") = 2000, py::arg("selection") = 1000, py::arg("seed") = 1);

  m.def(
      "combine",
      [](py::array_t<double> outputs, const std::vector<std::size_t>& labels,
         const std::vector<double>& weights) {
        return combine(prediction_set(outputs, labels), weights);
      },
      py::arg("outputs"), py::arg("labels"), py::arg("weights"));
  m.def(
      "accuracy",
      [](py::array_t<double> outputs, const std::vector<std::size_t>& labels,
         const std::vector<double>& weights) {
        return accuracy(prediction_set(outputs, labels), weights);
      },
      py::arg("outputs"), py::arg("labels"), py::arg("weights"));
  m.def("bem_weights", [](std::size_t n) { return bem_weights(n).weights; }, py::arg("networks"));
  m.def(
      "gem_weights",
      [](py::array_t<double> outputs, const std::vector<std::size_t>& labels) {
        return gem_weights(prediction_set(outputs, labels)).weights;
      },
      py::arg("outputs"), py::arg("labels"));
  m.def(
      "gem_weights_from_correlation",
      [](py::array_t<double, py::array::c_style | py::array::forcecast> c) {
        if (c.ndim() != 2 || c.shape(0) != c.shape(1)) {
          throw std::invalid_argument("correlation matrix must be square");
        }
        const std::vector<double> flat(c.data(), c.data() + c.size());
        return gem_weights_from_correlation(flat, c.shape(0)).weights;
      },
      py::arg("c"));
  m.def(
      "ga_weights",
      [](py::array_t<double> outputs, const std::vector<std::size_t>& labels,
         std::size_t budget, std::uint64_t seed) {
        const auto set = prediction_set(outputs, labels);
        EnsembleGAOptions opts;
        opts.eval_budget = budget;
        opts.seed = seed;
        py::gil_scoped_release release;
        const auto r = ga_weights(set, opts);
        py::gil_scoped_acquire acquire;
        return py::make_tuple(r.weights.weights, r.learning_accuracy);
      },
      py::arg("outputs"), py::arg("labels"), py::arg("budget") = 20000, py::arg("seed") = 0,
      "Returns (weights, learning_accuracy).");
  m.def(
      "win_draw_loss",
      [](const std::vector<std::vector<double>>& table) {
        std::vector<std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>> out;
        for (const auto& row : win_draw_loss(table)) {
          auto& r = out.emplace_back();
          for (const auto& c : row) r.emplace_back(c.wins, c.draws, c.losses);
        }
        return out;
      },
      py::arg("table"));

  m.def(
      "run_command",
      [](const std::string& command, const std::string& config_path) {
        const auto config = load_config(config_path);
        std::vector<std::string> files;
        py::gil_scoped_release release;
        if (command == "ensemble") {
          for (const auto& f : cmd_ensemble(config).files) files.push_back(f.string());
        } else {
          CommandResult r;
          if (command == "run") {
            r = cmd_run(config);
          } else if (command == "sweep") {
            r = cmd_sweep(config);
          } else if (command == "compare") {
            r = cmd_compare(config);
          } else if (command == "eda") {
            r = cmd_eda(config);
          } else {
            throw ConfigError("unknown command '" + command +
                              "'; valid: run, sweep, compare, eda, ensemble");
          }
          for (const auto& f : r.files) files.push_back(f.string());
        }
        return files;
      },
      py::arg("command"), py::arg("config_path"),
      "Runs a CLI command from a config file and returns the written paths.");
}
