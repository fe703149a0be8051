#include "cixga/benchmarks.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cixga/errors.hpp"
#include "cixga/rng.hpp"
#include "line_reader.hpp"

namespace cixga {
namespace {

constexpr std::array<std::string_view, 9> kNames = {
    "sphere",  "schwefel_ds", "rosenbrock", "rastrigin", "schwefel",
    "ackley",  "griewangk",   "fletcher",   "langerman",
};

constexpr double kPi = std::numbers::pi;
constexpr double kSchwefelOffset = 418.9829;
constexpr double kSchwefelOptimum = -420.9687;

std::vector<double> fletcher_terms(const FletcherData& d,
                                   std::span<const double> x) {
  const std::size_t p = d.dimension;
  std::vector<double> s(p), c(p), out(p, 0.0);
  for (std::size_t j = 0; j < p; ++j) {
    s[j] = std::sin(x[j]);
    c[j] = std::cos(x[j]);
  }
  for (std::size_t i = 0; i < p; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      acc += d.a[i * p + j] * s[j] + d.b[i * p + j] * c[j];
    }
    out[i] = acc;
  }
  return out;
}

}  // namespace

std::span<const std::string_view> function_names() { return kNames; }

Function parse_function(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Function>(i);
  }
  std::string valid;
  for (auto n : kNames) {
    if (!valid.empty()) valid += ", ";
    valid += n;
  }
  throw ConfigError("unknown benchmark '" + std::string(name) +
                    "'; valid names: " + valid);
}

std::string_view function_name(Function f) {
  return kNames.at(static_cast<std::size_t>(f));
}

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double schwefel_double_sum(std::span<const double> x) {
  double s = 0.0;
  double prefix = 0.0;
  for (double v : x) {
    prefix += v;
    s += prefix * prefix;
  }
  return s;
}

double rosenbrock(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = x[i] - 1.0;
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double rastrigin(std::span<const double> x) {
  double s = 10.0 * static_cast<double>(x.size());
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * kPi * v);
  return s;
}

// Printed form: 418.9829 p + sum x_i sin(sqrt|x_i|), minimum near -420.9687.
double schwefel(std::span<const double> x) {
  double s = kSchwefelOffset * static_cast<double>(x.size());
  for (double v : x) s += v * std::sin(std::sqrt(std::fabs(v)));
  return s;
}

double ackley(std::span<const double> x) {
  const double p = static_cast<double>(x.size());
  double sq = 0.0;
  double cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * kPi * v);
  }
  return 20.0 + std::numbers::e - 20.0 * std::exp(-0.2 * std::sqrt(sq / p)) -
         std::exp(cs / p);
}

double griewangk(std::span<const double> x) {
  double sum = 0.0;
  double prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * x[i] / 4000.0;
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return 1.0 + sum - prod;
}

double fletcher_powell(const FletcherData& data, std::span<const double> x) {
  const auto target = fletcher_terms(data, data.alpha);
  const auto actual = fletcher_terms(data, x);
  double s = 0.0;
  for (std::size_t i = 0; i < data.dimension; ++i) {
    const double d = target[i] - actual[i];
    s += d * d;
  }
  return s;
}

double langerman(const LangermanData& data, std::span<const double> x) {
  const std::size_t p = data.dimension;
  double s = 0.0;
  for (std::size_t i = 0; i < data.rows; ++i) {
    double dist = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      const double d = x[j] - data.a[i * p + j];
      dist += d * d;
    }
    s -= data.c[i] * std::exp(-dist / kPi) * std::cos(kPi * dist);
  }
  return s;
}

FletcherData make_fletcher(std::size_t dimension, std::uint64_t seed) {
  if (dimension == 0) throw ConfigError("Fletcher-Powell needs dimension >= 1");
  Rng rng(seed);
  FletcherData d;
  d.dimension = dimension;
  d.a.resize(dimension * dimension);
  d.b.resize(dimension * dimension);
  d.alpha.resize(dimension);
  for (double& v : d.a) v = rng.uniform(-100.0, 100.0);
  for (double& v : d.b) v = rng.uniform(-100.0, 100.0);
  for (double& v : d.alpha) v = rng.uniform(-kPi, kPi);
  return d;
}

LangermanData parse_langerman(std::string_view text, const std::string& source) {
  detail::LineReader reader(text, source);
  const auto header = reader.row(2, "header 'm p'");
  const auto whole = [&](double v, const char* what) {
    if (v < 1.0 || v != std::floor(v) || v > 1e6) {
      throw ParseError(source, reader.line(), 1,
                       std::string(what) + " must be a positive integer");
    }
    return static_cast<std::size_t>(v);
  };
  LangermanData d;
  d.rows = whole(header[0], "m");
  d.dimension = whole(header[1], "p");
  d.a.reserve(d.rows * d.dimension);
  for (std::size_t i = 0; i < d.rows; ++i) {
    const auto r = reader.row(d.dimension, "matrix row");
    d.a.insert(d.a.end(), r.begin(), r.end());
  }
  d.c = reader.row(d.rows, "weight vector c");
  return d;
}

LangermanData load_langerman(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open Langerman data file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_langerman(buf.str(), path);
}

LangermanData default_langerman(std::size_t dimension, std::uint64_t seed) {
  if (dimension == 0) throw ConfigError("Langerman needs dimension >= 1");
  // Offset keeps the stream distinct from Fletcher data built with the same seed.
  Rng rng(seed ^ 0x4c414e47u);
  LangermanData d;
  d.rows = dimension;
  d.dimension = dimension;
  d.a.resize(dimension * dimension);
  d.c.resize(dimension);
  for (double& v : d.a) v = rng.uniform(0.0, 10.0);
  for (double& v : d.c) v = rng.uniform(0.0, 1.0);
  return d;
}

Benchmark::Benchmark(Function f, std::size_t dimension, SearchDomain domain)
    : function_(f), dimension_(dimension), domain_(std::move(domain)) {}

Benchmark Benchmark::make(Function f, std::size_t dimension,
                          std::uint64_t data_seed) {
  if (dimension == 0) throw ConfigError("benchmark dimension must be >= 1");
  const auto box = [&](double lo, double hi) {
    return SearchDomain::uniform(dimension, lo, hi);
  };
  const auto at = [&](double v) { return Genes(dimension, v); };

  switch (f) {
    case Function::kFletcherPowell:
      return fletcher(make_fletcher(dimension, data_seed));
    case Function::kLangerman:
      return langerman(default_langerman(dimension, data_seed));
    default:
      break;
  }

  Benchmark b(f, dimension, box(-1.0, 1.0));
  switch (f) {
    case Function::kSphere:
    case Function::kRastrigin:
      b.domain_ = box(-5.12, 5.12);
      b.optimum_point_ = at(0.0);
      break;
    case Function::kSchwefelDoubleSum:
      b.domain_ = box(-65.536, 65.536);
      b.optimum_point_ = at(0.0);
      break;
    case Function::kRosenbrock:
      b.domain_ = box(-2.048, 2.048);
      b.optimum_point_ = at(1.0);
      break;
    case Function::kSchwefel:
      b.domain_ = box(-512.03, 511.97);
      b.optimum_point_ = at(kSchwefelOptimum);
      break;
    case Function::kAckley:
      b.domain_ = box(-30.0, 30.0);
      b.optimum_point_ = at(0.0);
      break;
    case Function::kGriewangk:
      b.domain_ = box(-600.0, 600.0);
      b.optimum_point_ = at(0.0);
      break;
    default:
      break;
  }
  b.optimum_value_ = 0.0;
  return b;
}

Benchmark Benchmark::fletcher(FletcherData data) {
  const std::size_t p = data.dimension;
  if (data.a.size() != p * p || data.b.size() != p * p || data.alpha.size() != p) {
    throw ConfigError("Fletcher-Powell data has inconsistent shapes");
  }
  Benchmark b(Function::kFletcherPowell, p,
              SearchDomain::uniform(p, -kPi, kPi));
  b.fletcher_target_ = fletcher_terms(data, data.alpha);
  b.optimum_point_ = data.alpha;
  b.optimum_value_ = 0.0;
  b.fletcher_ = std::make_shared<const FletcherData>(std::move(data));
  return b;
}

Benchmark Benchmark::langerman(LangermanData data) {
  if (data.rows == 0 || data.a.size() != data.rows * data.dimension ||
      data.c.size() != data.rows) {
    throw ConfigError("Langerman data has inconsistent shapes");
  }
  const std::size_t p = data.dimension;
  Benchmark b(Function::kLangerman, p, SearchDomain::uniform(p, 0.0, 10.0));
  b.langerman_ = std::make_shared<const LangermanData>(std::move(data));
  return b;
}

double Benchmark::operator()(std::span<const double> x) const {
  if (x.size() != dimension_) {
    throw std::invalid_argument("benchmark " + std::string(name()) +
                                " expects " + std::to_string(dimension_) +
                                " genes, got " + std::to_string(x.size()));
  }
  switch (function_) {
    case Function::kSphere:
      return sphere(x);
    case Function::kSchwefelDoubleSum:
      return schwefel_double_sum(x);
    case Function::kRosenbrock:
      return rosenbrock(x);
    case Function::kRastrigin:
      return rastrigin(x);
    case Function::kSchwefel:
      return schwefel(x);
    case Function::kAckley:
      return ackley(x);
    case Function::kGriewangk:
      return griewangk(x);
    case Function::kFletcherPowell: {
      const auto actual = fletcher_terms(*fletcher_, x);
      double s = 0.0;
      for (std::size_t i = 0; i < dimension_; ++i) {
        const double d = fletcher_target_[i] - actual[i];
        s += d * d;
      }
      return s;
    }
    case Function::kLangerman:
      return cixga::langerman(*langerman_, x);
  }
  return 0.0;
}

Objective Benchmark::objective() const {
  return [self = *this](std::span<const double> x) { return self(x); };
}

}  // namespace cixga
