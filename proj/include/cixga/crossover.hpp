#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cixga/individual.hpp"
#include "cixga/rng.hpp"

namespace cixga {

// ---------------------------------------------------------------------------
// CIXL2
// ---------------------------------------------------------------------------

struct Cixl2Params {
  std::size_t n_best = 5;
  double confidence = 0.70;
};

/// Per-gene interval limits and means of the best-n individuals, each
/// evaluated as a whole chromosome.
struct VirtualParents {
  Individual cill;  // lower limits
  Individual ciul;  // upper limits
  Individual cim;   // means
};

/// Builds CILL/CIUL/CIM from the n_best lowest-objective members and spends
/// three evaluations on them. Genes are clamped into the domain before
/// evaluation. Throws ConfigError if n_best < 2 or exceeds the population.
VirtualParents build_virtual_parents(std::span<const Individual> population,
                                     const Cixl2Params& params,
                                     const SearchDomain& domain,
                                     Evaluator& evaluate);

/// Same, with the Student-t critical value supplied by the caller.
VirtualParents build_virtual_parents(std::span<const Individual> population,
                                     std::size_t n_best, double critical_value,
                                     const SearchDomain& domain,
                                     Evaluator& evaluate);

/// One CIXL2 gene before clamping. When the population parent is better the
/// child extrapolates beyond it away from the virtual parent; otherwise it
/// lands beyond the virtual parent away from the population parent.
inline double cixl2_gene(double parent_gene, double virtual_gene,
                         bool parent_better, double r) {
  return parent_better ? r * (parent_gene - virtual_gene) + parent_gene
                       : r * (virtual_gene - parent_gene) + virtual_gene;
}

enum class CixRegion { kLower, kInterval, kUpper };

/// Which part of [a, CILL] | [CILL, CIUL] | (CIUL, b] holds the gene. The
/// interval is closed, so genes equal to either limit map to kInterval.
CixRegion cixl2_region(double gene, double cill, double ciul);

/// Child of `parent` and the virtual parent matching each gene's region.
/// Draws one uniform r per gene.
Genes cixl2_offspring(const Individual& parent, const VirtualParents& vp,
                      const SearchDomain& domain, Rng& rng);

// ---------------------------------------------------------------------------
// Rival operators
// ---------------------------------------------------------------------------

/// BLX-alpha: uniform in [min - alpha I, max + alpha I] per gene.
Genes blx_alpha(std::span<const double> p1, std::span<const double> p2,
                double alpha, const SearchDomain& domain, Rng& rng);

/// Polynomial spread factor of SBX for a uniform draw u in [0, 1).
double sbx_spread(double u, double eta);

/// SBX children of one gene pair for a given spread, before clamping.
inline std::pair<double, double> sbx_genes(double g1, double g2, double spread) {
  if (g1 == g2) return {g1, g2};
  return {0.5 * ((1.0 + spread) * g1 + (1.0 - spread) * g2),
          0.5 * ((1.0 - spread) * g1 + (1.0 + spread) * g2)};
}

/// Simulated binary crossover with distribution index eta.
std::pair<Genes, Genes> sbx(std::span<const double> p1,
                            std::span<const double> p2, double eta,
                            const SearchDomain& domain, Rng& rng);

/// Fuzzy recombination: per gene, a symmetric triangle centred on one
/// parent's gene (chosen by coin) with half-width d |g1 - g2|.
Genes fuzzy_recombination(std::span<const double> p1,
                          std::span<const double> p2, double d,
                          const SearchDomain& domain, Rng& rng);

/// Unimodal normal distribution crossover. The child is
///   m + xi (p2 - p1) + D * (component of eta orthogonal to p2 - p1),
/// with m the midpoint, D the distance of p3 from the p1-p2 line,
/// xi ~ N(0, sigma_xi^2), and eta an isotropic N(0, sigma_eta^2 I) vector.
/// Projecting the isotropic vector is equivalent in law to summing
/// independent normals along an orthonormal basis of the complement.
Genes undx(std::span<const double> p1, std::span<const double> p2,
           std::span<const double> p3, double sigma_xi, double sigma_eta,
           const SearchDomain& domain, Rng& rng);

// ---------------------------------------------------------------------------
// Operator interface used by the engines
// ---------------------------------------------------------------------------

class Crossover {
 public:
  virtual ~Crossover() = default;

  /// Registry name, e.g. "cixl2".
  virtual std::string name() const = 0;
  /// Parameter string without commas, e.g. "n=5;confidence=0.7".
  virtual std::string params() const = 0;
  /// Number of population parents consumed per mating.
  virtual std::size_t arity() const = 0;
  /// True for operators conventionally run under the MGG model.
  virtual bool prefers_mgg() const { return false; }

  /// Objective evaluations spent by each prepare() call.
  virtual std::size_t prepare_evaluations() const { return 0; }
  /// Refreshes population-derived state before a batch of matings.
  virtual void prepare(std::span<const Individual> /*population*/,
                       const SearchDomain& /*domain*/,
                       Evaluator& /*evaluate*/) {}

  /// One or two children of the given parents (size == arity()).
  virtual std::vector<Genes> mate(std::span<const Individual* const> parents,
                                  const SearchDomain& domain, Rng& rng) = 0;

  virtual std::unique_ptr<Crossover> clone() const = 0;
};

class Cixl2Crossover final : public Crossover {
 public:
  explicit Cixl2Crossover(Cixl2Params params = {});

  std::string name() const override { return "cixl2"; }
  std::string params() const override;
  std::size_t arity() const override { return 1; }
  std::size_t prepare_evaluations() const override { return 3; }
  void prepare(std::span<const Individual> population,
               const SearchDomain& domain, Evaluator& evaluate) override;
  std::vector<Genes> mate(std::span<const Individual* const> parents,
                          const SearchDomain& domain, Rng& rng) override;
  std::unique_ptr<Crossover> clone() const override {
    return std::make_unique<Cixl2Crossover>(*this);
  }

  const Cixl2Params& settings() const { return params_; }
  const VirtualParents& virtual_parents() const;

 private:
  Cixl2Params params_;
  double critical_value_;
  std::optional<VirtualParents> vp_;
};

class BlxCrossover final : public Crossover {
 public:
  explicit BlxCrossover(double alpha);
  std::string name() const override { return "blx"; }
  std::string params() const override;
  std::size_t arity() const override { return 2; }
  std::vector<Genes> mate(std::span<const Individual* const> parents,
                          const SearchDomain& domain, Rng& rng) override;
  std::unique_ptr<Crossover> clone() const override {
    return std::make_unique<BlxCrossover>(*this);
  }

 private:
  double alpha_;
};

class SbxCrossover final : public Crossover {
 public:
  explicit SbxCrossover(double eta);
  std::string name() const override { return "sbx"; }
  std::string params() const override;
  std::size_t arity() const override { return 2; }
  std::vector<Genes> mate(std::span<const Individual* const> parents,
                          const SearchDomain& domain, Rng& rng) override;
  std::unique_ptr<Crossover> clone() const override {
    return std::make_unique<SbxCrossover>(*this);
  }

 private:
  double eta_;
};

class FuzzyCrossover final : public Crossover {
 public:
  explicit FuzzyCrossover(double d = 0.5);
  std::string name() const override { return "fuzzy"; }
  std::string params() const override;
  std::size_t arity() const override { return 2; }
  std::vector<Genes> mate(std::span<const Individual* const> parents,
                          const SearchDomain& domain, Rng& rng) override;
  std::unique_ptr<Crossover> clone() const override {
    return std::make_unique<FuzzyCrossover>(*this);
  }

 private:
  double d_;
};

class UndxCrossover final : public Crossover {
 public:
  UndxCrossover(double sigma_xi, double sigma_eta);
  /// sigma_xi = 1/2, sigma_eta = 0.35 / sqrt(p).
  static UndxCrossover with_defaults(std::size_t dimension);

  std::string name() const override { return "undx"; }
  std::string params() const override;
  std::size_t arity() const override { return 3; }
  bool prefers_mgg() const override { return true; }
  std::vector<Genes> mate(std::span<const Individual* const> parents,
                          const SearchDomain& domain, Rng& rng) override;
  std::unique_ptr<Crossover> clone() const override {
    return std::make_unique<UndxCrossover>(*this);
  }

 private:
  double sigma_xi_;
  double sigma_eta_;
};

/// Builds an operator from "name" or "name(arg,...)":
///   cixl2(n, confidence)   default cixl2(5,0.70)
///   blx(alpha)             default blx(0.5)
///   sbx(eta)               default sbx(2)
///   fuzzy(d)               default fuzzy(0.5)
///   undx(sigma_xi, sigma_eta)  default undx(0.5, 0.35/sqrt(p))
/// Throws ConfigError for unknown names or bad arguments.
std::unique_ptr<Crossover> make_crossover(std::string_view spec,
                                          std::size_t dimension);

std::span<const std::string_view> crossover_names();

}  // namespace cixga
