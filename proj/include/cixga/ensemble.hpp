#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cixga/ga.hpp"

namespace cixga {

/// Precomputed network outputs for one split of a dataset.
class PredictionSet {
 public:
  PredictionSet() = default;
  /// `outputs` is [pattern][network][class], row-major. Throws
  /// std::invalid_argument on inconsistent shapes, out-of-range labels or
  /// non-finite outputs.
  PredictionSet(std::size_t patterns, std::size_t networks, std::size_t classes,
                std::vector<double> outputs, std::vector<std::size_t> labels);

  std::size_t patterns() const noexcept { return patterns_; }
  std::size_t networks() const noexcept { return networks_; }
  std::size_t classes() const noexcept { return classes_; }

  double output(std::size_t pattern, std::size_t network, std::size_t cls) const {
    return outputs_[(pattern * networks_ + network) * classes_ + cls];
  }
  std::span<const std::size_t> labels() const noexcept { return labels_; }

 private:
  std::size_t patterns_ = 0;
  std::size_t networks_ = 0;
  std::size_t classes_ = 0;
  std::vector<double> outputs_;
  std::vector<std::size_t> labels_;
};

/// Header "patterns networks classes", then one line per pattern: the label
/// followed by networks x classes outputs, network-major. Throws ParseError.
PredictionSet parse_predictions(std::string_view text,
                                const std::string& source = "<predictions>");
PredictionSet load_predictions(const std::string& path);
std::string format_predictions(const PredictionSet& set);

struct WeightVector {
  std::vector<double> weights;

  double sum() const;
};

/// argmax over classes of the weighted output sum; ties go to the lowest
/// class index. Throws std::invalid_argument on a length mismatch.
std::vector<std::size_t> combine(const PredictionSet& set,
                                 std::span<const double> weights);

/// Fraction of patterns whose combined decision matches the label.
double accuracy(const PredictionSet& set, std::span<const double> weights);

/// Equal weights 1/N.
WeightVector bem_weights(std::size_t networks);

/// Misfit correlation C_ij = E[m_i m_j], with m_k = onehot(label) - y_k
/// averaged over patterns and classes. Row-major networks x networks.
std::vector<double> misfit_correlation(const PredictionSet& set);

/// Weights proportional to the row sums of C^-1, normalized to sum 1.
/// Throws CollinearityError when C is singular or its condition number
/// exceeds 1e12.
WeightVector gem_weights_from_correlation(std::span<const double> c,
                                          std::size_t networks);
WeightVector gem_weights(const PredictionSet& learning);

/// Divides non-negative weights by their sum; falls back to equal weights
/// when the sum is zero.
WeightVector normalize_weights(std::span<const double> raw);

struct EnsembleGAOptions {
  std::size_t n_best = 5;
  double confidence = 0.70;
  std::size_t population_size = 100;
  std::size_t eval_budget = 20000;
  std::uint64_t seed = 0;
};

struct EnsembleGAResult {
  WeightVector weights;
  double learning_accuracy = 0.0;
  RunRecord run;
};

/// Generational GA with CIXL2 over raw weights in [0, 1]^N minimizing
/// 1 - learning accuracy. The initial population contains the equal-weight
/// point, so the result is never less accurate on the learning set than BEM.
EnsembleGAResult ga_weights(const PredictionSet& learning,
                            const EnsembleGAOptions& options = {});

struct WinDrawLoss {
  std::size_t wins = 0;
  std::size_t draws = 0;
  std::size_t losses = 0;
};

/// `table[d][m]` is the accuracy of method m on dataset d. Entry [r][c] of
/// the result counts datasets where method c beats, ties or loses to
/// method r.
std::vector<std::vector<WinDrawLoss>> win_draw_loss(
    const std::vector<std::vector<double>>& table);

}  // namespace cixga
