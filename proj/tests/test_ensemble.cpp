#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "cixga/errors.hpp"
#include "cixga/ensemble.hpp"
#include "cixga/rng.hpp"

using namespace cixga;

namespace {

// networks[0] is always right when `perfect`. The others get a `hint` bonus
// on the true class, so hint = 0 makes them pure noise.
PredictionSet synthetic(std::size_t patterns, std::size_t networks,
                        std::size_t classes, std::uint64_t seed, bool perfect,
                        double hint = 0.3) {
  Rng rng(seed);
  std::vector<double> out;
  std::vector<std::size_t> labels;
  for (std::size_t k = 0; k < patterns; ++k) {
    const std::size_t label = rng.below(classes);
    labels.push_back(label);
    for (std::size_t i = 0; i < networks; ++i) {
      for (std::size_t c = 0; c < classes; ++c) {
        double v = rng.uniform();
        if (i == 0 && perfect) v = c == label ? 0.9 : 0.05;
        if (i > 0 && c == label) v += hint;
        out.push_back(v);
      }
    }
  }
  return PredictionSet(patterns, networks, classes, std::move(out), std::move(labels));
}

// One-hot votes: networks[0] always names the label, the rest a random class.
// Patterns where every random voter agrees on a wrong class are only won
// when networks[0] holds more than half of the weight.
PredictionSet voters(std::size_t patterns, std::size_t networks,
                     std::size_t classes, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> out;
  std::vector<std::size_t> labels;
  for (std::size_t k = 0; k < patterns; ++k) {
    const std::size_t label = rng.below(classes);
    labels.push_back(label);
    for (std::size_t i = 0; i < networks; ++i) {
      const std::size_t vote = i == 0 ? label : rng.below(classes);
      for (std::size_t c = 0; c < classes; ++c) out.push_back(c == vote ? 1.0 : 0.0);
    }
  }
  return PredictionSet(patterns, networks, classes, std::move(out), std::move(labels));
}

}  // namespace

TEST_CASE("combine examples") {
  const PredictionSet two(1, 2, 2, {0.9, 0.1, 0.2, 0.8}, {0});
  const std::vector<double> w = {0.5, 0.5};
  CHECK(combine(two, w) == std::vector<std::size_t>{0});
  const PredictionSet one(2, 1, 3, {0.1, 0.7, 0.2, 0.5, 0.2, 0.3}, {1, 0});
  CHECK(combine(one, std::vector<double>{1.0}) == std::vector<std::size_t>{1, 0});
  const PredictionSet tie(1, 1, 3, {0.4, 0.4, 0.2}, {1});
  CHECK(combine(tie, std::vector<double>{1.0}) == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(combine(two, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("identical networks with equal weights agree with one network") {
  const auto base = synthetic(50, 1, 4, 3, false);
  std::vector<double> out;
  for (std::size_t k = 0; k < 50; ++k) {
    for (int copy = 0; copy < 3; ++copy) {
      for (std::size_t c = 0; c < 4; ++c) out.push_back(base.output(k, 0, c));
    }
  }
  const PredictionSet tripled(50, 3, 4, out,
                              std::vector<std::size_t>(base.labels().begin(), base.labels().end()));
  CHECK(combine(tripled, bem_weights(3).weights) == combine(base, std::vector<double>{1.0}));
}

TEST_CASE("combine is invariant under positive rescaling") {
  Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto set = synthetic(20, 1 + rng.below(6), 2 + rng.below(4), trial, false);
    std::vector<double> w(set.networks());
    for (double& v : w) v = rng.uniform();
    auto scaled = w;
    const double c = std::exp(rng.uniform(-5, 5));
    for (double& v : scaled) v *= c;
    REQUIRE(combine(set, w) == combine(set, scaled));
  }
}

TEST_CASE("BEM weights") {
  CHECK(bem_weights(1).weights == std::vector<double>{1.0});
  CHECK(bem_weights(4).weights == std::vector<double>(4, 0.25));
  CHECK(bem_weights(7).sum() == doctest::Approx(1.0).epsilon(1e-15));
  const auto perfect = synthetic(40, 1, 3, 2, true);
  CHECK(accuracy(perfect, bem_weights(1).weights) == 1.0);
}

TEST_CASE("GEM on hand-computable correlation matrices") {
  const std::vector<double> c = {2.0, 0.0, 0.0, 1.0};
  const auto w = gem_weights_from_correlation(c, 2);
  CHECK(std::fabs(w.weights[0] - 1.0 / 3.0) <= 1e-9);
  CHECK(std::fabs(w.weights[1] - 2.0 / 3.0) <= 1e-9);
  const std::vector<double> d = {4.0, 0, 0, 0, 1.0, 0, 0, 0, 2.0};
  const auto w3 = gem_weights_from_correlation(d, 3);
  CHECK(w3.weights[1] > w3.weights[2]);
  CHECK(w3.weights[2] > w3.weights[0]);
  CHECK(w3.sum() == doctest::Approx(1.0).epsilon(1e-15));
  const std::vector<double> singular = {1.0, 1.0, 1.0, 1.0};
  CHECK_THROWS_AS(gem_weights_from_correlation(singular, 2), CollinearityError);
}

TEST_CASE("GEM on predictions") {
  const auto set = synthetic(200, 4, 3, 9, false);
  const auto w = gem_weights(set);
  CHECK(w.sum() == doctest::Approx(1.0).epsilon(1e-12));
  const auto c = misfit_correlation(set);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(c[i * 4 + j] == doctest::Approx(c[j * 4 + i]));
  }
  // Identical networks make C rank one.
  const auto base = synthetic(30, 1, 2, 1, false);
  std::vector<double> out;
  for (std::size_t k = 0; k < 30; ++k) {
    for (int copy = 0; copy < 2; ++copy) {
      for (std::size_t q = 0; q < 2; ++q) out.push_back(base.output(k, 0, q));
    }
  }
  const PredictionSet twins(30, 2, 2, out,
                            std::vector<std::size_t>(base.labels().begin(), base.labels().end()));
  CHECK_THROWS_AS(gem_weights(twins), CollinearityError);
  CHECK_THROWS_AS(gem_weights(base), std::invalid_argument);
}

TEST_CASE("normalize_weights") {
  const auto w = normalize_weights(std::vector<double>{1.0, 3.0});
  CHECK(w.weights == std::vector<double>{0.25, 0.75});
  CHECK(normalize_weights(std::vector<double>{0.0, 0.0, 0.0}).weights ==
        std::vector<double>(3, 1.0 / 3.0));
}

TEST_CASE("GA weights") {
  const auto set = voters(300, 5, 3, 21);
  EnsembleGAOptions opts;
  opts.eval_budget = 5000;
  opts.seed = 2;
  const auto r = ga_weights(set, opts);
  CHECK(r.weights.sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.learning_accuracy >= accuracy(set, bem_weights(5).weights));
  CHECK(r.learning_accuracy == 1.0);
  CHECK(r.weights.weights[0] > 0.5);

  const auto soft = synthetic(120, 5, 3, 21, true, 0.0);
  CHECK(ga_weights(soft, opts).learning_accuracy == 1.0);

  Rng rng(8);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto noisy = synthetic(60, 2 + rng.below(6), 2 + rng.below(3), 100 + seed, false);
    EnsembleGAOptions o;
    o.eval_budget = 1200;
    o.seed = seed;
    const auto g = ga_weights(noisy, o);
    CHECK(g.learning_accuracy >= accuracy(noisy, bem_weights(noisy.networks()).weights));
  }
}

TEST_CASE("win/draw/loss") {
  // Columns A, B over three datasets.
  const std::vector<std::vector<double>> table = {{0.9, 0.8}, {0.8, 0.8}, {0.7, 0.8}};
  const auto wdl = win_draw_loss(table);
  CHECK(wdl[1][0].wins == 1);
  CHECK(wdl[1][0].draws == 1);
  CHECK(wdl[1][0].losses == 1);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(wdl[r][c].wins + wdl[r][c].draws + wdl[r][c].losses == 3);
    }
  }
  CHECK(wdl[0][0].draws == 3);
  CHECK_THROWS_AS(win_draw_loss({{0.1, 0.2}, {0.3}}), std::invalid_argument);
}

TEST_CASE("prediction file round trip and errors") {
  const auto set = synthetic(7, 3, 2, 4, false);
  const auto text = format_predictions(set);
  const auto back = parse_predictions(text, "p.txt");
  CHECK(back.patterns() == 7);
  CHECK(back.networks() == 3);
  for (std::size_t k = 0; k < 7; ++k) {
    CHECK(back.labels()[k] == set.labels()[k]);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t c = 0; c < 2; ++c) CHECK(back.output(k, i, c) == set.output(k, i, c));
    }
  }
  const auto expect_error = [](const std::string& t, std::size_t line) {
    try {
      parse_predictions(t, "p.txt");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_error("2 1 2\n0 0.1 0.9\n", 3);
  expect_error("1 1 2\n2 0.1 0.9\n", 2);
  expect_error("1 1 2\n0 0.1 0.9 0.3\n", 2);
  expect_error("1 1 2\n0 0.1 abc\n", 2);
  expect_error("1 1 2\n0 0.1 0.9\n1 0.2 0.2\n", 3);
  expect_error("0 1 2\n", 1);
  CHECK_THROWS_AS(load_predictions("/nonexistent.txt"), ConfigError);
}
