#include "cixga/crossover.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "cixga/errors.hpp"
#include "cixga/interval_stats.hpp"

namespace cixga {
namespace {

constexpr std::array<std::string_view, 5> kCrossoverNames = {
    "cixl2", "blx", "sbx", "fuzzy", "undx"};

void check_same_size(std::span<const double> a, std::span<const double> b,
                     const SearchDomain& domain) {
  if (a.size() != domain.dimension() || b.size() != domain.dimension()) {
    throw std::invalid_argument("parent dimension does not match the domain");
  }
}

std::vector<std::size_t> best_indices(std::span<const Individual> population,
                                      std::size_t n) {
  std::vector<std::size_t> idx(population.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n),
                    idx.end(), [&](std::size_t a, std::size_t b) {
                      const double va = population[a].value();
                      const double vb = population[b].value();
                      return va < vb || (va == vb && a < b);
                    });
  idx.resize(n);
  return idx;
}

}  // namespace

VirtualParents build_virtual_parents(std::span<const Individual> population,
                                     std::size_t n_best, double critical_value,
                                     const SearchDomain& domain,
                                     Evaluator& evaluate) {
  if (n_best < 2) throw ConfigError("CIXL2 needs n_best >= 2");
  if (n_best > population.size()) {
    throw ConfigError("CIXL2 n_best (" + std::to_string(n_best) +
                      ") exceeds the population size (" +
                      std::to_string(population.size()) + ")");
  }
  const auto best = best_indices(population, n_best);
  const std::size_t p = domain.dimension();

  VirtualParents vp;
  vp.cill.genes.resize(p);
  vp.ciul.genes.resize(p);
  vp.cim.genes.resize(p);
  std::vector<double> column(n_best);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < n_best; ++k) {
      column[k] = population[best[k]].genes[i];
    }
    const auto ci = confidence_interval(sample_stats(column), critical_value);
    vp.cill.genes[i] = domain.clamp(i, ci.lower);
    vp.ciul.genes[i] = domain.clamp(i, ci.upper);
    vp.cim.genes[i] = domain.clamp(i, ci.center);
  }
  evaluate.evaluate(vp.cill);
  evaluate.evaluate(vp.ciul);
  evaluate.evaluate(vp.cim);
  return vp;
}

VirtualParents build_virtual_parents(std::span<const Individual> population,
                                     const Cixl2Params& params,
                                     const SearchDomain& domain,
                                     Evaluator& evaluate) {
  if (params.n_best < 2) throw ConfigError("CIXL2 needs n_best >= 2");
  return build_virtual_parents(population, params.n_best,
                               t_critical(params.n_best, params.confidence),
                               domain, evaluate);
}

CixRegion cixl2_region(double gene, double cill, double ciul) {
  if (gene < cill) return CixRegion::kLower;
  if (gene > ciul) return CixRegion::kUpper;
  return CixRegion::kInterval;
}

Genes cixl2_offspring(const Individual& parent, const VirtualParents& vp,
                      const SearchDomain& domain, Rng& rng) {
  const std::size_t p = domain.dimension();
  if (parent.genes.size() != p) {
    throw std::invalid_argument("parent dimension does not match the domain");
  }
  const double fitness = parent.value();
  const bool beats_cill = fitness < vp.cill.value();
  const bool beats_cim = fitness < vp.cim.value();
  const bool beats_ciul = fitness < vp.ciul.value();

  Genes child(p);
  for (std::size_t i = 0; i < p; ++i) {
    const double g = parent.genes[i];
    const double r = rng.uniform();
    double v = 0.0;
    bool parent_better = false;
    switch (cixl2_region(g, vp.cill.genes[i], vp.ciul.genes[i])) {
      case CixRegion::kLower:
        v = vp.cill.genes[i];
        parent_better = beats_cill;
        break;
      case CixRegion::kInterval:
        v = vp.cim.genes[i];
        parent_better = beats_cim;
        break;
      case CixRegion::kUpper:
        v = vp.ciul.genes[i];
        parent_better = beats_ciul;
        break;
    }
    child[i] = domain.clamp(i, cixl2_gene(g, v, parent_better, r));
  }
  return child;
}

Genes blx_alpha(std::span<const double> p1, std::span<const double> p2,
                double alpha, const SearchDomain& domain, Rng& rng) {
  check_same_size(p1, p2, domain);
  Genes child(p1.size());
  for (std::size_t i = 0; i < child.size(); ++i) {
    const double lo = std::min(p1[i], p2[i]);
    const double hi = std::max(p1[i], p2[i]);
    const double ext = alpha * (hi - lo);
    child[i] = domain.clamp(i, rng.uniform(lo - ext, hi + ext));
  }
  return child;
}

double sbx_spread(double u, double eta) {
  const double e = 1.0 / (eta + 1.0);
  if (u <= 0.5) return std::pow(2.0 * u, e);
  return std::pow(1.0 / (2.0 * (1.0 - u)), e);
}

std::pair<Genes, Genes> sbx(std::span<const double> p1,
                            std::span<const double> p2, double eta,
                            const SearchDomain& domain, Rng& rng) {
  check_same_size(p1, p2, domain);
  Genes c1(p1.size());
  Genes c2(p1.size());
  for (std::size_t i = 0; i < c1.size(); ++i) {
    const auto [a, b] = sbx_genes(p1[i], p2[i], sbx_spread(rng.uniform(), eta));
    c1[i] = domain.clamp(i, a);
    c2[i] = domain.clamp(i, b);
  }
  return {std::move(c1), std::move(c2)};
}

Genes fuzzy_recombination(std::span<const double> p1,
                          std::span<const double> p2, double d,
                          const SearchDomain& domain, Rng& rng) {
  check_same_size(p1, p2, domain);
  Genes child(p1.size());
  for (std::size_t i = 0; i < child.size(); ++i) {
    const double mode = rng.coin() ? p2[i] : p1[i];
    const double width = d * std::fabs(p1[i] - p2[i]);
    // u1 + u2 - 1 is triangular on (-1, 1) with its peak at 0.
    const double t = rng.uniform() + rng.uniform() - 1.0;
    child[i] = domain.clamp(i, mode + width * t);
  }
  return child;
}

Genes undx(std::span<const double> p1, std::span<const double> p2,
           std::span<const double> p3, double sigma_xi, double sigma_eta,
           const SearchDomain& domain, Rng& rng) {
  check_same_size(p1, p2, domain);
  if (p3.size() != domain.dimension()) {
    throw std::invalid_argument("parent dimension does not match the domain");
  }
  const std::size_t p = p1.size();
  std::vector<double> mid(p), dir(p), rel(p);
  double dir_sq = 0.0;
  for (std::size_t i = 0; i < p; ++i) {
    mid[i] = 0.5 * (p1[i] + p2[i]);
    dir[i] = p2[i] - p1[i];
    rel[i] = p3[i] - p1[i];
    dir_sq += dir[i] * dir[i];
  }
  const double dir_norm = std::sqrt(dir_sq);

  Genes child = mid;
  if (dir_norm < 1e-12) {
    // No primary axis: isotropic spread scaled by the distance to p3.
    double dist_sq = 0.0;
    for (double r : rel) dist_sq += r * r;
    const double dist = std::sqrt(dist_sq);
    for (std::size_t i = 0; i < p; ++i) {
      child[i] += dist * rng.normal(0.0, sigma_eta);
    }
  } else {
    // Distance of p3 from the line through p1 and p2.
    double along = 0.0;
    for (std::size_t i = 0; i < p; ++i) along += rel[i] * dir[i];
    along /= dir_sq;
    double dist_sq = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
      const double o = rel[i] - along * dir[i];
      dist_sq += o * o;
    }
    const double dist = std::sqrt(dist_sq);

    const double xi = rng.normal(0.0, sigma_xi);
    for (std::size_t i = 0; i < p; ++i) child[i] += xi * dir[i];

    if (dist >= 1e-12) {
      std::vector<double> eta(p);
      double proj = 0.0;
      for (std::size_t i = 0; i < p; ++i) {
        eta[i] = rng.normal(0.0, sigma_eta);
        proj += eta[i] * dir[i];
      }
      proj /= dir_sq;
      for (std::size_t i = 0; i < p; ++i) {
        child[i] += dist * (eta[i] - proj * dir[i]);
      }
    }
  }
  domain.clamp(child);
  return child;
}

// ---------------------------------------------------------------------------

Cixl2Crossover::Cixl2Crossover(Cixl2Params params) : params_(params) {
  if (params_.n_best < 2) throw ConfigError("CIXL2 needs n_best >= 2");
  if (!(params_.confidence > 0.0 && params_.confidence < 1.0)) {
    throw ConfigError("CIXL2 confidence must lie in (0, 1)");
  }
  critical_value_ = t_critical(params_.n_best, params_.confidence);
}

std::string Cixl2Crossover::params() const {
  return fmt::format("n={};confidence={:g}", params_.n_best, params_.confidence);
}

void Cixl2Crossover::prepare(std::span<const Individual> population,
                             const SearchDomain& domain, Evaluator& evaluate) {
  vp_ = build_virtual_parents(population, params_.n_best, critical_value_,
                              domain, evaluate);
}

const VirtualParents& Cixl2Crossover::virtual_parents() const {
  if (!vp_) throw std::logic_error("CIXL2 used before prepare()");
  return *vp_;
}

std::vector<Genes> Cixl2Crossover::mate(
    std::span<const Individual* const> parents, const SearchDomain& domain,
    Rng& rng) {
  std::vector<Genes> out;
  out.push_back(cixl2_offspring(*parents[0], virtual_parents(), domain, rng));
  return out;
}

BlxCrossover::BlxCrossover(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0)) throw ConfigError("BLX alpha must be >= 0");
}

std::string BlxCrossover::params() const {
  return fmt::format("alpha={:g}", alpha_);
}

std::vector<Genes> BlxCrossover::mate(std::span<const Individual* const> parents,
                                      const SearchDomain& domain, Rng& rng) {
  std::vector<Genes> out;
  out.push_back(
      blx_alpha(parents[0]->genes, parents[1]->genes, alpha_, domain, rng));
  return out;
}

SbxCrossover::SbxCrossover(double eta) : eta_(eta) {
  if (!(eta >= 0.0)) throw ConfigError("SBX eta must be >= 0");
}

std::string SbxCrossover::params() const { return fmt::format("eta={:g}", eta_); }

std::vector<Genes> SbxCrossover::mate(std::span<const Individual* const> parents,
                                      const SearchDomain& domain, Rng& rng) {
  auto [a, b] = sbx(parents[0]->genes, parents[1]->genes, eta_, domain, rng);
  std::vector<Genes> out;
  out.push_back(std::move(a));
  out.push_back(std::move(b));
  return out;
}

FuzzyCrossover::FuzzyCrossover(double d) : d_(d) {
  if (!(d > 0.0)) throw ConfigError("fuzzy recombination d must be > 0");
}

std::string FuzzyCrossover::params() const { return fmt::format("d={:g}", d_); }

std::vector<Genes> FuzzyCrossover::mate(
    std::span<const Individual* const> parents, const SearchDomain& domain,
    Rng& rng) {
  std::vector<Genes> out;
  out.push_back(fuzzy_recombination(parents[0]->genes, parents[1]->genes, d_,
                                    domain, rng));
  return out;
}

UndxCrossover::UndxCrossover(double sigma_xi, double sigma_eta)
    : sigma_xi_(sigma_xi), sigma_eta_(sigma_eta) {
  if (!(sigma_xi >= 0.0 && sigma_eta >= 0.0)) {
    throw ConfigError("UNDX deviations must be >= 0");
  }
}

UndxCrossover UndxCrossover::with_defaults(std::size_t dimension) {
  return UndxCrossover(0.5, 0.35 / std::sqrt(static_cast<double>(dimension)));
}

std::string UndxCrossover::params() const {
  return fmt::format("sigma_xi={:g};sigma_eta={:g}", sigma_xi_, sigma_eta_);
}

std::vector<Genes> UndxCrossover::mate(
    std::span<const Individual* const> parents, const SearchDomain& domain,
    Rng& rng) {
  if (domain.dimension() < 2) throw ConfigError("UNDX needs dimension >= 2");
  std::vector<Genes> out;
  out.push_back(undx(parents[0]->genes, parents[1]->genes, parents[2]->genes,
                     sigma_xi_, sigma_eta_, domain, rng));
  return out;
}

// ---------------------------------------------------------------------------

std::span<const std::string_view> crossover_names() { return kCrossoverNames; }

std::unique_ptr<Crossover> make_crossover(std::string_view spec,
                                          std::size_t dimension) {
  const auto trim = [](std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return std::string_view{};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
  };
  spec = trim(spec);
  std::string_view name = spec;
  std::vector<double> args;
  if (const auto open = spec.find('('); open != std::string_view::npos) {
    if (spec.back() != ')') {
      throw ConfigError("malformed operator '" + std::string(spec) + "'");
    }
    name = trim(spec.substr(0, open));
    std::string_view rest = spec.substr(open + 1, spec.size() - open - 2);
    while (!trim(rest).empty()) {
      const auto comma = rest.find(',');
      const std::string_view tok = trim(rest.substr(0, comma));
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ConfigError("bad argument '" + std::string(tok) + "' in operator '" +
                          std::string(spec) + "'");
      }
      args.push_back(v);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  const auto arg = [&](std::size_t i, double fallback) {
    return i < args.size() ? args[i] : fallback;
  };
  const auto max_args = [&](std::size_t n) {
    if (args.size() > n) {
      throw ConfigError("too many arguments for operator '" + std::string(spec) +
                        "'");
    }
  };

  if (name == "cixl2") {
    max_args(2);
    const double n = arg(0, 5.0);
    if (n < 2.0 || n != std::floor(n)) {
      throw ConfigError("CIXL2 n must be an integer >= 2");
    }
    return std::make_unique<Cixl2Crossover>(
        Cixl2Params{static_cast<std::size_t>(n), arg(1, 0.70)});
  }
  if (name == "blx") {
    max_args(1);
    return std::make_unique<BlxCrossover>(arg(0, 0.5));
  }
  if (name == "sbx") {
    max_args(1);
    return std::make_unique<SbxCrossover>(arg(0, 2.0));
  }
  if (name == "fuzzy") {
    max_args(1);
    return std::make_unique<FuzzyCrossover>(arg(0, 0.5));
  }
  if (name == "undx") {
    max_args(2);
    const auto d = UndxCrossover::with_defaults(std::max<std::size_t>(dimension, 1));
    if (args.empty()) return std::make_unique<UndxCrossover>(d);
    return std::make_unique<UndxCrossover>(
        arg(0, 0.5), arg(1, 0.35 / std::sqrt(static_cast<double>(dimension))));
  }
  std::string valid;
  for (auto n : kCrossoverNames) {
    if (!valid.empty()) valid += ", ";
    valid += n;
  }
  throw ConfigError("unknown operator '" + std::string(name) +
                    "'; valid names: " + valid);
}

}  // namespace cixga
