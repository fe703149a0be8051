#include "cixga/interval_stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cixga/errors.hpp"

namespace cixga {
namespace {

// Continued fraction for the regularized incomplete beta (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 500;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  const double front = std::exp(log_front);
  // The fraction converges fast only below the mean of the beta law.
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

}  // namespace

SampleStats sample_stats(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) {
    throw InvalidSample("interval estimation needs at least 2 values, got " +
                        std::to_string(n));
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(n);

  bool constant = true;
  double ss = 0.0;
  for (double v : values) {
    constant = constant && v == values[0];
    ss += (v - mean) * (v - mean);
  }
  SampleStats stats;
  stats.count = n;
  // A constant sample must give exactly its value and zero spread, which
  // the rounded sum above does not guarantee.
  stats.mean = constant ? values[0] : mean;
  stats.stddev = constant ? 0.0 : std::sqrt(ss / static_cast<double>(n - 1));
  return stats;
}

double t_cdf(double q, double df) {
  if (q == 0.0) return 0.5;
  const double x = df / (df + q * q);
  const double tail = 0.5 * regularized_incomplete_beta(0.5 * df, 0.5, x);
  return q > 0.0 ? 1.0 - tail : tail;
}

double t_quantile(double df, double prob) {
  if (!(df >= 1.0)) {
    throw std::domain_error("t_quantile: degrees of freedom must be >= 1");
  }
  if (!(prob > 0.0 && prob < 1.0)) {
    throw std::domain_error("t_quantile: probability must lie in (0, 1)");
  }
  if (prob == 0.5) return 0.0;
  if (prob < 0.5) return -t_quantile(df, 1.0 - prob);

  double lo = 0.0;
  double hi = 1.0;
  while (t_cdf(hi, df) < prob) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (t_cdf(mid, df) < prob) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double t_critical(std::size_t n, double confidence) {
  if (n < 2) {
    throw InvalidSample("interval estimation needs at least 2 values, got " +
                        std::to_string(n));
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::domain_error("confidence must lie in (0, 1)");
  }
  const double alpha = 1.0 - confidence;
  return t_quantile(static_cast<double>(n - 1), 1.0 - 0.5 * alpha);
}

ConfidenceInterval confidence_interval(const SampleStats& stats,
                                       double critical_value) {
  const double half = critical_value * stats.stddev /
                      std::sqrt(static_cast<double>(stats.count));
  return {stats.mean - half, stats.mean + half, stats.mean};
}

ConfidenceInterval confidence_interval(std::span<const double> values,
                                       double confidence) {
  const SampleStats stats = sample_stats(values);
  return confidence_interval(stats, t_critical(stats.count, confidence));
}

}  // namespace cixga
