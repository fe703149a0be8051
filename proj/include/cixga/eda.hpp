#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cixga/ga.hpp"
#include "cixga/individual.hpp"

namespace cixga {

struct EDAConfig {
  std::size_t population_size = 2000;
  std::size_t selection_size = 1000;
  std::size_t eval_budget = 300000;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Maximum-likelihood Gaussian marginal of one gene.
struct GaussianMarginal {
  double mean = 0.0;
  double stddev = 0.0;  // n denominator
};

/// Per-gene ML fit over the selected individuals.
std::vector<GaussianMarginal> fit_marginals(std::span<const Individual> selected);

/// UMDAc with Gaussian marginals and elitism.
///
/// Per generation: keep the best selection_size individuals, fit a Gaussian
/// to each gene, then form the next population from the best individual plus
/// population_size - 1 fresh samples clamped to the domain. Standard
/// deviations are floored at 1e-12 of the gene's range. Throws ConfigError
/// when the budget cannot pay for the first population plus one generation.
RunRecord run_umdac(const EDAConfig& config, const SearchDomain& domain,
                    const Objective& objective);

}  // namespace cixga
