#include "cixga/ensemble.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "cixga/crossover.hpp"
#include "cixga/errors.hpp"
#include "line_reader.hpp"

namespace cixga {
namespace {

constexpr double kMaxCondition = 1e12;

std::size_t positive_count(double v, const std::string& source,
                           std::size_t line, const char* what) {
  if (v < 1.0 || v != std::floor(v) || v > 1e9) {
    throw ParseError(source, line, 1, std::string(what) +
                                          " must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

PredictionSet::PredictionSet(std::size_t patterns, std::size_t networks,
                             std::size_t classes, std::vector<double> outputs,
                             std::vector<std::size_t> labels)
    : patterns_(patterns),
      networks_(networks),
      classes_(classes),
      outputs_(std::move(outputs)),
      labels_(std::move(labels)) {
  if (networks_ == 0 || classes_ == 0) {
    throw std::invalid_argument("prediction set needs >= 1 network and class");
  }
  if (outputs_.size() != patterns_ * networks_ * classes_ ||
      labels_.size() != patterns_) {
    throw std::invalid_argument("prediction set shapes are inconsistent");
  }
  for (std::size_t label : labels_) {
    if (label >= classes_) {
      throw std::invalid_argument("class label " + std::to_string(label) +
                                  " out of range");
    }
  }
  for (double v : outputs_) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite output");
  }
}

PredictionSet parse_predictions(std::string_view text, const std::string& source) {
  detail::LineReader reader(text, source);
  const auto header = reader.row(3, "header 'patterns networks classes'");
  const std::size_t patterns =
      positive_count(header[0], source, reader.line(), "patterns");
  const std::size_t networks =
      positive_count(header[1], source, reader.line(), "networks");
  const std::size_t classes =
      positive_count(header[2], source, reader.line(), "classes");

  std::vector<double> outputs;
  outputs.reserve(patterns * networks * classes);
  std::vector<std::size_t> labels;
  labels.reserve(patterns);
  for (std::size_t k = 0; k < patterns; ++k) {
    const auto row = reader.row(1 + networks * classes, "pattern row");
    const double label = row[0];
    if (label < 0.0 || label != std::floor(label) ||
        label >= static_cast<double>(classes)) {
      throw ParseError(source, reader.line(), 1,
                       fmt::format("label {} is not a class index below {}",
                                   label, classes));
    }
    labels.push_back(static_cast<std::size_t>(label));
    outputs.insert(outputs.end(), row.begin() + 1, row.end());
  }
  if (!reader.at_end()) {
    throw ParseError(source, reader.line() + 1, 1,
                     "unexpected data after the last pattern");
  }
  return PredictionSet(patterns, networks, classes, std::move(outputs),
                       std::move(labels));
}

PredictionSet load_predictions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open prediction file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_predictions(buf.str(), path);
}

std::string format_predictions(const PredictionSet& set) {
  std::string out =
      fmt::format("{} {} {}\n", set.patterns(), set.networks(), set.classes());
  for (std::size_t k = 0; k < set.patterns(); ++k) {
    out += std::to_string(set.labels()[k]);
    for (std::size_t i = 0; i < set.networks(); ++i) {
      for (std::size_t c = 0; c < set.classes(); ++c) {
        out += fmt::format(" {:.17g}", set.output(k, i, c));
      }
    }
    out += '\n';
  }
  return out;
}

double WeightVector::sum() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

std::vector<std::size_t> combine(const PredictionSet& set,
                                 std::span<const double> weights) {
  if (weights.size() != set.networks()) {
    throw std::invalid_argument(fmt::format(
        "weight vector has {} entries for {} networks", weights.size(),
        set.networks()));
  }
  std::vector<std::size_t> decision(set.patterns());
  std::vector<double> score(set.classes());
  for (std::size_t k = 0; k < set.patterns(); ++k) {
    std::fill(score.begin(), score.end(), 0.0);
    for (std::size_t i = 0; i < set.networks(); ++i) {
      for (std::size_t c = 0; c < set.classes(); ++c) {
        score[c] += weights[i] * set.output(k, i, c);
      }
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < score.size(); ++c) {
      if (score[c] > score[best]) best = c;
    }
    decision[k] = best;
  }
  return decision;
}

double accuracy(const PredictionSet& set, std::span<const double> weights) {
  if (set.patterns() == 0) return 0.0;
  const auto decision = combine(set, weights);
  std::size_t hits = 0;
  for (std::size_t k = 0; k < decision.size(); ++k) {
    hits += decision[k] == set.labels()[k] ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(set.patterns());
}

WeightVector bem_weights(std::size_t networks) {
  if (networks == 0) throw std::invalid_argument("BEM needs >= 1 network");
  return {std::vector<double>(networks, 1.0 / static_cast<double>(networks))};
}

std::vector<double> misfit_correlation(const PredictionSet& set) {
  const std::size_t n = set.networks();
  const std::size_t cls = set.classes();
  std::vector<double> c(n * n, 0.0);
  std::vector<double> misfit(n);
  for (std::size_t k = 0; k < set.patterns(); ++k) {
    for (std::size_t q = 0; q < cls; ++q) {
      const double target = set.labels()[k] == q ? 1.0 : 0.0;
      for (std::size_t i = 0; i < n; ++i) misfit[i] = target - set.output(k, i, q);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] += misfit[i] * misfit[j];
      }
    }
  }
  const double samples = static_cast<double>(set.patterns() * cls);
  if (samples > 0.0) {
    for (double& v : c) v /= samples;
  }
  return c;
}

WeightVector gem_weights_from_correlation(std::span<const double> c,
                                          std::size_t networks) {
  if (c.size() != networks * networks || networks == 0) {
    throw std::invalid_argument("correlation matrix has the wrong size");
  }
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                       Eigen::RowMajor>>
      m(c.data(), static_cast<Eigen::Index>(networks),
        static_cast<Eigen::Index>(networks));
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU |
                                                     Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double largest = sv(0);
  const double smallest = sv(sv.size() - 1);
  if (!(largest > 0.0) || !(smallest > 0.0) ||
      largest / smallest > kMaxCondition) {
    throw CollinearityError(fmt::format(
        "misfit correlation matrix is singular or ill-conditioned "
        "(condition estimate {:.3g}); the networks are collinear",
        smallest > 0.0 ? largest / smallest : INFINITY));
  }
  // Row sums of C^-1 are the solution of C x = 1.
  const Eigen::VectorXd x =
      svd.solve(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(networks)));
  const double total = x.sum();
  if (!(std::fabs(total) > 0.0) || !std::isfinite(total)) {
    throw CollinearityError("GEM normalization is undefined (sum of C^-1 is 0)");
  }
  WeightVector w;
  w.weights.resize(networks);
  for (std::size_t i = 0; i < networks; ++i) {
    w.weights[i] = x(static_cast<Eigen::Index>(i)) / total;
  }
  return w;
}

WeightVector gem_weights(const PredictionSet& learning) {
  if (learning.networks() < 2) {
    throw std::invalid_argument("GEM needs at least 2 networks");
  }
  return gem_weights_from_correlation(misfit_correlation(learning),
                                      learning.networks());
}

WeightVector normalize_weights(std::span<const double> raw) {
  double total = 0.0;
  for (double v : raw) total += std::max(v, 0.0);
  if (!(total > 0.0)) return bem_weights(raw.size());
  WeightVector w;
  w.weights.reserve(raw.size());
  for (double v : raw) w.weights.push_back(std::max(v, 0.0) / total);
  return w;
}

EnsembleGAResult ga_weights(const PredictionSet& learning,
                            const EnsembleGAOptions& options) {
  const std::size_t n = learning.networks();
  const SearchDomain domain = SearchDomain::uniform(n, 0.0, 1.0);

  GAConfig config;
  config.population_size = options.population_size;
  config.eval_budget = options.eval_budget;
  config.seed = options.seed;

  const Objective objective = [&learning](std::span<const double> genes) {
    const auto w = normalize_weights(genes);
    return 1.0 - accuracy(learning, w.weights);
  };
  Cixl2Crossover crossover({options.n_best, options.confidence});
  const std::vector<Genes> seeds = {Genes(n, 1.0 / static_cast<double>(n))};

  EnsembleGAResult result;
  result.run = run_generational(config, domain, objective, crossover, seeds);
  result.weights = normalize_weights(result.run.best.genes);
  result.learning_accuracy = accuracy(learning, result.weights.weights);
  return result;
}

std::vector<std::vector<WinDrawLoss>> win_draw_loss(
    const std::vector<std::vector<double>>& table) {
  const std::size_t methods = table.empty() ? 0 : table.front().size();
  for (const auto& row : table) {
    if (row.size() != methods) {
      throw std::invalid_argument("accuracy table rows differ in length");
    }
  }
  std::vector<std::vector<WinDrawLoss>> out(methods,
                                            std::vector<WinDrawLoss>(methods));
  for (const auto& row : table) {
    for (std::size_t r = 0; r < methods; ++r) {
      for (std::size_t c = 0; c < methods; ++c) {
        if (row[c] > row[r]) {
          ++out[r][c].wins;
        } else if (row[c] < row[r]) {
          ++out[r][c].losses;
        } else {
          ++out[r][c].draws;
        }
      }
    }
  }
  return out;
}

}  // namespace cixga
