#include "cixga/ga.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <string>

#include "cixga/errors.hpp"

namespace cixga {
namespace {

TracePoint snapshot(std::span<const Individual> population, std::size_t generation,
                    std::size_t evaluations) {
  TracePoint tp;
  tp.generation = generation;
  tp.evaluations = evaluations;
  tp.best = population[0].value();
  double sum = 0.0;
  for (const auto& ind : population) {
    tp.best = std::min(tp.best, ind.value());
    sum += ind.value();
  }
  tp.mean = sum / static_cast<double>(population.size());
  return tp;
}

std::size_t best_index(std::span<const Individual> population) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (population[i].value() < population[best].value()) best = i;
  }
  return best;
}

std::size_t worst_index(std::span<const Individual> population) {
  std::size_t worst = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (population[i].value() > population[worst].value()) worst = i;
  }
  return worst;
}

std::vector<Individual> seeded_population(const GAConfig& config,
                                          const SearchDomain& domain,
                                          std::span<const Genes> seeds,
                                          Evaluator& evaluate, Rng& rng) {
  auto population = initialize_population(domain, config.population_size, rng);
  const std::size_t k = std::min(seeds.size(), population.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (seeds[i].size() != domain.dimension()) {
      throw ConfigError("seed individual has the wrong dimension");
    }
    population[i].genes = seeds[i];
    domain.clamp(population[i].genes);
  }
  for (auto& ind : population) evaluate.evaluate(ind);
  return population;
}

void check_budget(const GAConfig& config, std::size_t per_generation,
                  const char* model) {
  if (config.eval_budget < config.population_size + per_generation) {
    throw ConfigError(std::string("evaluation budget ") +
                      std::to_string(config.eval_budget) +
                      " cannot pay for the initial population and one " + model +
                      " (" +
                      std::to_string(config.population_size + per_generation) +
                      " evaluations)");
  }
}

}  // namespace

void GAConfig::validate() const {
  if (population_size < 1) throw ConfigError("population size must be >= 1");
  if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) {
    throw ConfigError("crossover probability must lie in [0, 1]");
  }
  if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0)) {
    throw ConfigError("mutation probability must lie in [0, 1]");
  }
  if (!(mutation_b > 0.0)) throw ConfigError("mutation b must be > 0");
  if (mgg_lambda < 1) throw ConfigError("MGG lambda must be >= 1");
  if (eval_budget < 1) throw ConfigError("evaluation budget must be >= 1");
}

std::vector<Individual> initialize_population(const SearchDomain& domain,
                                              std::size_t size, Rng& rng) {
  std::vector<Individual> population(size);
  for (auto& ind : population) {
    ind.genes.resize(domain.dimension());
    for (std::size_t i = 0; i < domain.dimension(); ++i) {
      ind.genes[i] = rng.uniform(domain.lower(i), domain.upper(i));
    }
  }
  return population;
}

std::size_t tournament_index(std::span<const Individual> population, Rng& rng) {
  const std::size_t a = rng.below(population.size());
  const std::size_t b = rng.below(population.size());
  return population[b].value() < population[a].value() ? b : a;
}

double nonuniform_delta(double t, double g_max, double b, double y, double r) {
  const double exponent = std::pow(1.0 - t / g_max, b);
  return y * (1.0 - std::pow(r, exponent));
}

Genes nonuniform_mutate(std::span<const double> genes, const SearchDomain& domain,
                        std::size_t t, std::size_t g_max, double b, double p_m,
                        Rng& rng) {
  Genes out(genes.begin(), genes.end());
  const double tt = static_cast<double>(t);
  const double gm = static_cast<double>(g_max);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!(rng.uniform() < p_m)) continue;
    const bool down = rng.coin();
    const double r = rng.uniform();
    if (!down) {
      out[i] += nonuniform_delta(tt, gm, b, domain.upper(i) - out[i], r);
    } else {
      out[i] -= nonuniform_delta(tt, gm, b, out[i] - domain.lower(i), r);
    }
    assert(out[i] >= domain.lower(i) && out[i] <= domain.upper(i));
  }
  return out;
}

std::size_t rank_roulette(std::span<const double> values, Rng& rng) {
  const std::size_t m = values.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  // Weights m, m-1, ..., 1 sum to m(m+1)/2.
  const double total = 0.5 * static_cast<double>(m) * static_cast<double>(m + 1);
  double target = rng.uniform() * total;
  for (std::size_t rank = 0; rank < m; ++rank) {
    target -= static_cast<double>(m - rank);
    if (target < 0.0) return order[rank];
  }
  return order[m - 1];
}

RunRecord run_generational(const GAConfig& config, const SearchDomain& domain,
                           const Objective& objective, Crossover& crossover,
                           std::span<const Genes> seeds) {
  config.validate();
  const std::size_t n = config.population_size;
  const std::size_t per_generation = n + crossover.prepare_evaluations();
  check_budget(config, per_generation, "generation");
  const std::size_t g_max = (config.eval_budget - n) / per_generation;

  Rng rng(config.seed);
  Evaluator evaluate(objective);
  auto population = seeded_population(config, domain, seeds, evaluate, rng);

  RunRecord record;
  record.seed = config.seed;
  record.generations = g_max;
  record.trace.reserve(g_max + 1);
  record.trace.push_back(snapshot(population, 0, evaluate.count()));
  Individual elite = population[best_index(population)];

  std::vector<const Individual*> parents(crossover.arity());
  std::vector<Individual> offspring(n);
  for (std::size_t t = 1; t <= g_max; ++t) {
    crossover.prepare(population, domain, evaluate);
    for (std::size_t slot = 0; slot < n; ++slot) {
      const Individual& first = tournament_select(population, rng);
      Genes child;
      if (rng.uniform() < config.crossover_prob) {
        parents[0] = &first;
        for (std::size_t k = 1; k < parents.size(); ++k) {
          parents[k] = &tournament_select(population, rng);
        }
        child = std::move(crossover.mate(parents, domain, rng).front());
      } else {
        child = first.genes;
      }
      offspring[slot] = Individual(nonuniform_mutate(
          child, domain, t, g_max, config.mutation_b, config.mutation_prob, rng));
    }
    for (auto& ind : offspring) evaluate.evaluate(ind);

    offspring[worst_index(offspring)] = elite;
    population.swap(offspring);
    const std::size_t b = best_index(population);
    if (population[b].value() < elite.value()) elite = population[b];
    record.trace.push_back(snapshot(population, t, evaluate.count()));
  }

  record.best = elite;
  record.evaluations = evaluate.count();
  return record;
}

RunRecord run_mgg(const GAConfig& config, const SearchDomain& domain,
                  const Objective& objective, Crossover& crossover,
                  std::span<const Genes> seeds) {
  config.validate();
  const std::size_t n = config.population_size;
  if (n < 2) throw ConfigError("MGG needs a population of at least 2");
  const std::size_t per_step = config.mgg_lambda + crossover.prepare_evaluations();
  check_budget(config, per_step, "MGG step");
  const std::size_t steps = (config.eval_budget - n) / per_step;

  Rng rng(config.seed);
  Evaluator evaluate(objective);
  auto population = seeded_population(config, domain, seeds, evaluate, rng);

  RunRecord record;
  record.seed = config.seed;
  record.generations = steps;
  record.trace.reserve(steps + 1);
  record.trace.push_back(snapshot(population, 0, evaluate.count()));

  std::vector<const Individual*> parents(crossover.arity());
  std::vector<Individual> pool;
  std::vector<double> rest;
  std::vector<std::size_t> rest_index;
  for (std::size_t t = 1; t <= steps; ++t) {
    crossover.prepare(population, domain, evaluate);
    const std::size_t i = rng.below(n);
    std::size_t j = rng.below(n - 1);
    if (j >= i) ++j;

    pool.clear();
    pool.push_back(population[i]);
    pool.push_back(population[j]);
    std::size_t made = 0;
    while (made < config.mgg_lambda) {
      // One-parent operators alternate between the two sampled slots.
      parents[0] = (crossover.arity() == 1 && made % 2 == 1) ? &population[j]
                                                             : &population[i];
      if (parents.size() > 1) parents[1] = &population[j];
      if (parents.size() > 2) {
        std::size_t k = rng.below(n);
        if (n > 2) {
          while (k == i || k == j) k = rng.below(n);
        }
        parents[2] = &population[k];
      }
      for (auto& genes : crossover.mate(parents, domain, rng)) {
        if (made == config.mgg_lambda) break;
        pool.emplace_back(nonuniform_mutate(genes, domain, t, steps,
                                            config.mutation_b,
                                            config.mutation_prob, rng));
        ++made;
      }
    }
    for (std::size_t c = 2; c < pool.size(); ++c) evaluate.evaluate(pool[c]);

    const std::size_t best = best_index(pool);
    rest.clear();
    rest_index.clear();
    for (std::size_t c = 0; c < pool.size(); ++c) {
      if (c == best) continue;
      rest.push_back(pool[c].value());
      rest_index.push_back(c);
    }
    const std::size_t pick = rest_index[rank_roulette(rest, rng)];
    population[i] = pool[best];
    population[j] = pool[pick];
    record.trace.push_back(snapshot(population, t, evaluate.count()));
  }

  record.best = population[best_index(population)];
  record.evaluations = evaluate.count();
  return record;
}

RunRecord run_ga(const GAConfig& config, const SearchDomain& domain,
                 const Objective& objective, Crossover& crossover,
                 std::span<const Genes> seeds) {
  if (config.update_model == UpdateModel::kMgg) {
    return run_mgg(config, domain, objective, crossover, seeds);
  }
  return run_generational(config, domain, objective, crossover, seeds);
}

}  // namespace cixga
