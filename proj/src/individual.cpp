#include "cixga/individual.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cixga/errors.hpp"

namespace cixga {

SearchDomain::SearchDomain(std::vector<Bounds> bounds)
    : bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw ConfigError("search domain has no dimensions");
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    if (!(bounds_[i].lower < bounds_[i].upper)) {
      throw ConfigError("search domain gene " + std::to_string(i) +
                        ": lower bound must be below upper bound");
    }
  }
}

SearchDomain SearchDomain::uniform(std::size_t dimension, double lower,
                                   double upper) {
  return SearchDomain(std::vector<Bounds>(dimension, Bounds{lower, upper}));
}

double SearchDomain::clamp(std::size_t i, double value) const {
  return std::clamp(value, bounds_[i].lower, bounds_[i].upper);
}

void SearchDomain::clamp(std::span<double> genes) const {
  for (std::size_t i = 0; i < genes.size(); ++i) genes[i] = clamp(i, genes[i]);
}

bool SearchDomain::contains(std::span<const double> genes) const {
  if (genes.size() != bounds_.size()) return false;
  for (std::size_t i = 0; i < genes.size(); ++i) {
    if (!(genes[i] >= bounds_[i].lower && genes[i] <= bounds_[i].upper)) {
      return false;
    }
  }
  return true;
}

double Individual::value() const {
  if (!objective) throw std::logic_error("individual has not been evaluated");
  return *objective;
}

}  // namespace cixga
