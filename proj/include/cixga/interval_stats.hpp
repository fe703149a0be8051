#pragma once

#include <cstddef>
#include <span>

namespace cixga {

/// Location and dispersion of one gene over the best-n individuals.
struct SampleStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample form, n - 1 denominator
  std::size_t count = 0;
};

/// Symmetric interval around the sample mean.
struct ConfidenceInterval {
  double lower = 0.0;
  double upper = 0.0;
  double center = 0.0;

  double half_width() const { return upper - center; }
};

/// Throws InvalidSample when fewer than two values are given.
SampleStats sample_stats(std::span<const double> values);

/// Student-t CDF with `df` degrees of freedom.
double t_cdf(double q, double df);

/// Inverse of t_cdf. Requires df >= 1 and prob in (0, 1); otherwise throws
/// std::domain_error. The CDF of the result matches prob to within 1e-9.
double t_quantile(double df, double prob);

/// Studentized two-sided interval for the mean at the given confidence
/// (1 - alpha): mean -/+ t(n-1, 1 - alpha/2) * s / sqrt(n).
ConfidenceInterval confidence_interval(std::span<const double> values,
                                       double confidence);

/// Same interval from precomputed statistics and critical value.
ConfidenceInterval confidence_interval(const SampleStats& stats,
                                       double critical_value);

/// Critical value t(n-1, 1 - alpha/2) for a sample of size n.
double t_critical(std::size_t n, double confidence);

}  // namespace cixga
