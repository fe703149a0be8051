#include "cixga/eda.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cixga/errors.hpp"
#include "cixga/rng.hpp"

namespace cixga {

void EDAConfig::validate() const {
  if (population_size < 2) throw ConfigError("EDA population must be >= 2");
  if (selection_size < 1 || selection_size > population_size) {
    throw ConfigError("EDA selection size must lie in [1, population size]");
  }
  if (eval_budget < population_size + (population_size - 1)) {
    throw ConfigError("evaluation budget " + std::to_string(eval_budget) +
                      " cannot pay for the first population and one generation (" +
                      std::to_string(2 * population_size - 1) + " evaluations)");
  }
}

std::vector<GaussianMarginal> fit_marginals(std::span<const Individual> selected) {
  if (selected.empty()) return {};
  const std::size_t p = selected.front().genes.size();
  const double n = static_cast<double>(selected.size());
  std::vector<GaussianMarginal> out(p);
  for (std::size_t i = 0; i < p; ++i) {
    double sum = 0.0;
    for (const auto& ind : selected) sum += ind.genes[i];
    const double mean = sum / n;
    double ss = 0.0;
    for (const auto& ind : selected) {
      const double d = ind.genes[i] - mean;
      ss += d * d;
    }
    out[i] = {mean, std::sqrt(ss / n)};
  }
  return out;
}

RunRecord run_umdac(const EDAConfig& config, const SearchDomain& domain,
                    const Objective& objective) {
  config.validate();
  const std::size_t n = config.population_size;
  const std::size_t per_generation = n - 1;
  const std::size_t generations = (config.eval_budget - n) / per_generation;

  Rng rng(config.seed);
  Evaluator evaluate(objective);
  auto population = initialize_population(domain, n, rng);
  for (auto& ind : population) evaluate.evaluate(ind);

  const auto by_value = [](const Individual& a, const Individual& b) {
    return a.value() < b.value();
  };
  const auto record_point = [&](std::size_t g) {
    TracePoint tp;
    tp.generation = g;
    tp.evaluations = evaluate.count();
    double sum = 0.0;
    tp.best = population.front().value();
    for (const auto& ind : population) {
      tp.best = std::min(tp.best, ind.value());
      sum += ind.value();
    }
    tp.mean = sum / static_cast<double>(n);
    return tp;
  };

  RunRecord record;
  record.seed = config.seed;
  record.generations = generations;
  record.trace.push_back(record_point(0));

  std::vector<double> floor(domain.dimension());
  for (std::size_t i = 0; i < floor.size(); ++i) {
    floor[i] = 1e-12 * (domain.upper(i) - domain.lower(i));
  }

  for (std::size_t g = 1; g <= generations; ++g) {
    // Stable ordering keeps selection deterministic under ties.
    std::stable_sort(population.begin(), population.end(), by_value);
    auto marginals = fit_marginals(
        std::span<const Individual>(population).first(config.selection_size));
    for (std::size_t i = 0; i < marginals.size(); ++i) {
      marginals[i].stddev = std::max(marginals[i].stddev, floor[i]);
    }

    // population[0] is the elite and survives untouched.
    for (std::size_t k = 1; k < n; ++k) {
      Individual& ind = population[k];
      for (std::size_t i = 0; i < marginals.size(); ++i) {
        ind.genes[i] = domain.clamp(
            i, rng.normal(marginals[i].mean, marginals[i].stddev));
      }
      evaluate.evaluate(ind);
    }
    record.trace.push_back(record_point(g));
  }

  record.best = *std::min_element(population.begin(), population.end(), by_value);
  record.evaluations = evaluate.count();
  return record;
}

}  // namespace cixga
