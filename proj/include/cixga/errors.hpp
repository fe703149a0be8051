#pragma once

#include <stdexcept>
#include <string>

namespace cixga {

// Sample too small or otherwise unusable for interval estimation.
class InvalidSample : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inconsistent or unknown configuration (operators, budgets, registries).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input file. The message carries the location.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column,
             const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// GEM correlation matrix is singular or too badly conditioned to invert.
class CollinearityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cixga
