#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cixga {

using Genes = std::vector<double>;

/// Objective to be minimized.
using Objective = std::function<double(std::span<const double>)>;

struct Bounds {
  double lower;
  double upper;
};

/// Closed box [a_i, b_i] per gene.
class SearchDomain {
 public:
  /// Throws ConfigError unless every lower < upper and the box is nonempty.
  explicit SearchDomain(std::vector<Bounds> bounds);

  /// Same interval for each of `dimension` genes.
  static SearchDomain uniform(std::size_t dimension, double lower, double upper);

  std::size_t dimension() const noexcept { return bounds_.size(); }
  const Bounds& operator[](std::size_t i) const { return bounds_[i]; }
  double lower(std::size_t i) const { return bounds_[i].lower; }
  double upper(std::size_t i) const { return bounds_[i].upper; }
  std::span<const Bounds> bounds() const noexcept { return bounds_; }

  double clamp(std::size_t i, double value) const;
  void clamp(std::span<double> genes) const;
  bool contains(std::span<const double> genes) const;

 private:
  std::vector<Bounds> bounds_;
};

struct Individual {
  Genes genes;
  std::optional<double> objective;

  Individual() = default;
  explicit Individual(Genes g) : genes(std::move(g)) {}
  Individual(Genes g, double value) : genes(std::move(g)), objective(value) {}

  bool evaluated() const noexcept { return objective.has_value(); }
  /// Throws std::logic_error when unevaluated.
  double value() const;
};

/// Lower objective first. Both must be evaluated.
inline bool better(const Individual& a, const Individual& b) {
  return a.value() < b.value();
}

/// Wraps an objective and counts every call against a budget.
class Evaluator {
 public:
  explicit Evaluator(Objective f) : objective_(std::move(f)) {}

  double operator()(std::span<const double> genes) {
    ++count_;
    return objective_(genes);
  }
  void evaluate(Individual& ind) { ind.objective = (*this)(ind.genes); }

  std::size_t count() const noexcept { return count_; }

 private:
  Objective objective_;
  std::size_t count_ = 0;
};

}  // namespace cixga
