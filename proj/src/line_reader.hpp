#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cixga/errors.hpp"

namespace cixga::detail {

// Line-oriented tokenizer that remembers where each token came from.
class LineReader {
 public:
  LineReader(std::string_view text, const std::string& source)
      : text_(text), source_(source) {}

  // Reads the next non-blank line and returns exactly `count` reals from it.
  std::vector<double> row(std::size_t count, const char* what) {
    std::string_view line;
    do {
      if (pos_ >= text_.size()) {
        throw ParseError(source_, line_no_ + 1, 1,
                         std::string("unexpected end of file, expected ") +
                             what);
      }
      const std::size_t end = text_.find('\n', pos_);
      const std::size_t stop = end == std::string_view::npos ? text_.size() : end;
      line = text_.substr(pos_, stop - pos_);
      pos_ = stop + 1;
      ++line_no_;
    } while (line.find_first_not_of(" \t\r") == std::string_view::npos);

    std::vector<double> values;
    std::size_t i = 0;
    while (true) {
      i = line.find_first_not_of(" \t\r", i);
      if (i == std::string_view::npos) break;
      std::size_t j = line.find_first_of(" \t\r", i);
      if (j == std::string_view::npos) j = line.size();
      const std::string_view token = line.substr(i, j - i);
      if (values.size() == count) {
        throw ParseError(source_, line_no_, i + 1,
                         std::string("too many values in ") + what);
      }
      double v = 0.0;
      const auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc{} || ptr != token.data() + token.size() ||
          !std::isfinite(v)) {
        throw ParseError(source_, line_no_, i + 1,
                         "not a number: '" + std::string(token) + "'");
      }
      values.push_back(v);
      i = j;
    }
    if (values.size() != count) {
      throw ParseError(source_, line_no_, line.size() + 1,
                       std::string("expected ") + std::to_string(count) +
                           " values in " + what + ", found " +
                           std::to_string(values.size()));
    }
    return values;
  }

  std::size_t line() const { return line_no_; }

  // True when only blank lines remain.
  bool at_end() const {
    return text_.substr(std::min(pos_, text_.size()))
               .find_first_not_of(" \t\r\n") == std::string_view::npos;
  }

 private:
  std::string_view text_;
  const std::string& source_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

}  // namespace cixga::detail
