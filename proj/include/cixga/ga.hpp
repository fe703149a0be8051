#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cixga/crossover.hpp"
#include "cixga/individual.hpp"
#include "cixga/rng.hpp"

namespace cixga {

enum class UpdateModel { kGenerational, kMgg };

struct GAConfig {
  std::size_t population_size = 100;
  double crossover_prob = 0.6;
  double mutation_prob = 0.05;  // per gene
  double mutation_b = 5.0;
  UpdateModel update_model = UpdateModel::kGenerational;
  std::size_t mgg_lambda = 200;
  std::size_t eval_budget = 300000;
  std::uint64_t seed = 0;

  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

/// One row of a convergence trace.
struct TracePoint {
  std::size_t generation = 0;
  std::size_t evaluations = 0;
  double best = 0.0;
  double mean = 0.0;
};

struct RunRecord {
  std::vector<TracePoint> trace;
  Individual best;
  std::uint64_t seed = 0;
  std::size_t evaluations = 0;
  std::size_t generations = 0;  // planned generations (or MGG steps)
};

/// Genes drawn independently and uniformly inside the domain.
std::vector<Individual> initialize_population(const SearchDomain& domain,
                                              std::size_t size, Rng& rng);

/// Binary tournament: two uniform draws with replacement, lower objective
/// wins, ties go to the first draw. Returns the winner's index.
std::size_t tournament_index(std::span<const Individual> population, Rng& rng);

inline const Individual& tournament_select(
    std::span<const Individual> population, Rng& rng) {
  return population[tournament_index(population, rng)];
}

/// Step size y (1 - r^((1 - t/g_max)^b)), always in [0, y].
double nonuniform_delta(double t, double g_max, double b, double y, double r);

/// Non-uniform mutation of each gene with probability p_m. For a mutated
/// gene a coin picks the direction (towards the upper or lower bound) and a
/// fresh r sets the step. Draw order per gene: uniform (selection), then,
/// if selected, coin and uniform r.
Genes nonuniform_mutate(std::span<const double> genes, const SearchDomain& domain,
                        std::size_t t, std::size_t g_max, double b, double p_m,
                        Rng& rng);

/// Generational model with elitism.
///
/// Each generation: crossover.prepare() on the current population, then for
/// every slot a tournament parent, a uniform draw against crossover_prob,
/// extra tournament parents and mating if it passes (first child kept),
/// otherwise a copy; then mutation. All offspring are evaluated and the
/// best-so-far replaces the worst offspring. A generation that does not fit
/// in the remaining budget is not started.
///
/// `seeds` overwrite the first initial individuals (after the uniform draws,
/// so the random stream is unchanged). Throws ConfigError when the budget
/// cannot pay for the initial population plus one generation.
RunRecord run_generational(const GAConfig& config, const SearchDomain& domain,
                           const Objective& objective, Crossover& crossover,
                           std::span<const Genes> seeds = {});

/// Minimal generation gap model. Each step picks two distinct slots, breeds
/// mgg_lambda mutated children from them (a random third member joins for
/// three-parent operators), and writes back the best of parents plus
/// children and one rank-roulette pick from the rest.
RunRecord run_mgg(const GAConfig& config, const SearchDomain& domain,
                  const Objective& objective, Crossover& crossover,
                  std::span<const Genes> seeds = {});

/// Dispatches on config.update_model.
RunRecord run_ga(const GAConfig& config, const SearchDomain& domain,
                 const Objective& objective, Crossover& crossover,
                 std::span<const Genes> seeds = {});

/// Index drawn with weights proportional to (m - rank + 1) over `values`
/// ranked ascending (rank 1 = lowest). Ties keep input order.
std::size_t rank_roulette(std::span<const double> values, Rng& rng);

}  // namespace cixga
