#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cixga/individual.hpp"

namespace cixga {

enum class Function {
  kSphere,
  kSchwefelDoubleSum,
  kRosenbrock,
  kRastrigin,
  kSchwefel,
  kAckley,
  kGriewangk,
  kFletcherPowell,
  kLangerman,
};

/// Registry names in the order above: "sphere", "schwefel_ds", ...
std::span<const std::string_view> function_names();
/// Throws ConfigError listing the valid names.
Function parse_function(std::string_view name);
std::string_view function_name(Function f);

/// Random instance of the Fletcher-Powell problem. Row-major p x p matrices.
struct FletcherData {
  std::size_t dimension = 0;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> alpha;
};

/// a, b uniform in [-100, 100]; alpha uniform in [-pi, pi].
FletcherData make_fletcher(std::size_t dimension, std::uint64_t seed);

/// Langerman coefficients: m rows of p centres plus m weights.
struct LangermanData {
  std::size_t rows = 0;       // m
  std::size_t dimension = 0;  // p
  std::vector<double> a;      // row-major m x p
  std::vector<double> c;      // length m
};

/// Parses "m p", then m rows of p values, then m values for c.
/// Throws ParseError with the offending line and column.
LangermanData parse_langerman(std::string_view text,
                              const std::string& source = "<langerman>");
LangermanData load_langerman(const std::string& path);

/// Seeded stand-in used when no data file is supplied: m = p, centres
/// uniform in [0, 10], weights uniform in [0, 1].
LangermanData default_langerman(std::size_t dimension, std::uint64_t seed = 0);

/// One objective from the test suite together with its domain and optimum.
class Benchmark {
 public:
  /// Builds a standard problem. Fletcher-Powell and Langerman draw their
  /// data from `data_seed`.
  static Benchmark make(Function f, std::size_t dimension,
                        std::uint64_t data_seed = 0);
  static Benchmark fletcher(FletcherData data);
  static Benchmark langerman(LangermanData data);

  Function function() const noexcept { return function_; }
  std::string_view name() const { return function_name(function_); }
  std::size_t dimension() const noexcept { return dimension_; }
  const SearchDomain& domain() const noexcept { return domain_; }
  const std::optional<Genes>& optimum_point() const noexcept {
    return optimum_point_;
  }
  const std::optional<double>& optimum_value() const noexcept {
    return optimum_value_;
  }

  /// Throws std::invalid_argument on a dimension mismatch.
  double operator()(std::span<const double> x) const;

  /// Copyable callable bound to this benchmark's data.
  Objective objective() const;

 private:
  Benchmark(Function f, std::size_t dimension, SearchDomain domain);

  Function function_;
  std::size_t dimension_;
  SearchDomain domain_;
  std::optional<Genes> optimum_point_;
  std::optional<double> optimum_value_;
  std::shared_ptr<const FletcherData> fletcher_;
  std::vector<double> fletcher_target_;  // A_i, fixed by alpha
  std::shared_ptr<const LangermanData> langerman_;
};

double sphere(std::span<const double> x);
double schwefel_double_sum(std::span<const double> x);
double rosenbrock(std::span<const double> x);
double rastrigin(std::span<const double> x);
double schwefel(std::span<const double> x);
double ackley(std::span<const double> x);
double griewangk(std::span<const double> x);
double fletcher_powell(const FletcherData& data, std::span<const double> x);
double langerman(const LangermanData& data, std::span<const double> x);

}  // namespace cixga
