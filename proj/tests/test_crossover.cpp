#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "cixga/crossover.hpp"
#include "cixga/errors.hpp"
#include "oracles.hpp"

using namespace cixga;

namespace {

const Objective kSphere = [](std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
};

std::vector<Individual> random_population(const SearchDomain& domain,
                                          std::size_t n, Rng& rng) {
  Evaluator eval(kSphere);
  std::vector<Individual> pop(n);
  for (auto& ind : pop) {
    ind.genes.resize(domain.dimension());
    for (std::size_t i = 0; i < domain.dimension(); ++i) {
      ind.genes[i] = rng.uniform(domain.lower(i), domain.upper(i));
    }
    eval.evaluate(ind);
  }
  return pop;
}

}  // namespace

TEST_CASE("virtual parents of 1..5") {
  const SearchDomain domain = SearchDomain::uniform(2, -10.0, 10.0);
  std::vector<Individual> pop;
  for (int k = 1; k <= 5; ++k) pop.emplace_back(Genes{double(k), 0.5}, double(k));
  pop.emplace_back(Genes{9.0, 9.0}, 100.0);
  Evaluator eval(kSphere);
  const auto vp = build_virtual_parents(pop, Cixl2Params{5, 0.70}, domain, eval);
  const double hw = oracle::t_quantile(4, 0.85) * std::sqrt(2.5) / std::sqrt(5.0);
  CHECK(vp.cim.genes[0] == doctest::Approx(3.0));
  CHECK(vp.cill.genes[0] == doctest::Approx(3.0 - hw).epsilon(1e-8));
  CHECK(vp.ciul.genes[0] == doctest::Approx(3.0 + hw).epsilon(1e-8));
  CHECK(std::fabs(vp.cill.genes[0] - 2.15880) < 1e-4);
  CHECK(std::fabs(vp.ciul.genes[0] - 3.84120) < 1e-4);
  CHECK(vp.cill.genes[1] == 0.5);
  CHECK(vp.ciul.genes[1] == 0.5);
  CHECK(eval.count() == 3);
  CHECK(vp.cim.value() == doctest::Approx(9.25));
}

TEST_CASE("virtual parents collapse on identical best-n") {
  const SearchDomain domain = SearchDomain::uniform(3, -1.0, 1.0);
  std::vector<Individual> pop(6, Individual(Genes{0.1, -0.2, 0.3}, 1.0));
  pop.emplace_back(Genes{0.9, 0.9, 0.9}, 5.0);
  Evaluator eval(kSphere);
  const auto vp = build_virtual_parents(pop, Cixl2Params{5, 0.95}, domain, eval);
  CHECK(vp.cill.genes == pop[0].genes);
  CHECK(vp.ciul.genes == pop[0].genes);
  CHECK(vp.cim.genes == pop[0].genes);
}

TEST_CASE("virtual parents are ordered, clamped, and need a valid n") {
  const SearchDomain domain = SearchDomain::uniform(6, -5.0, 5.0);
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pop = random_population(domain, 20, rng);
    Evaluator eval(kSphere);
    const auto vp = build_virtual_parents(pop, Cixl2Params{2 + rng.below(19), 0.99},
                                          domain, eval);
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(vp.cill.genes[i] <= vp.cim.genes[i]);
      CHECK(vp.cim.genes[i] <= vp.ciul.genes[i]);
    }
    CHECK(domain.contains(vp.cill.genes));
    CHECK(domain.contains(vp.ciul.genes));
  }
  const auto pop = random_population(domain, 4, rng);
  Evaluator eval(kSphere);
  CHECK_THROWS_AS(build_virtual_parents(pop, Cixl2Params{5, 0.7}, domain, eval), ConfigError);
  CHECK_THROWS_AS(build_virtual_parents(pop, Cixl2Params{1, 0.7}, domain, eval), ConfigError);
}

TEST_CASE("CIXL2 gene arithmetic") {
  CHECK(cixl2_gene(2.0, 1.0, true, 0.5) == 2.5);
  CHECK(cixl2_gene(2.0, 1.0, false, 0.5) == 0.5);
  CHECK(cixl2_gene(2.0, 1.0, true, 0.0) == 2.0);
  CHECK(cixl2_gene(-3.0, 4.0, false, 0.0) == 4.0);
}

TEST_CASE("CIXL2 regions are closed at the interval limits") {
  CHECK(cixl2_region(1.0, 1.0, 2.0) == CixRegion::kInterval);
  CHECK(cixl2_region(2.0, 1.0, 2.0) == CixRegion::kInterval);
  CHECK(cixl2_region(0.999, 1.0, 2.0) == CixRegion::kLower);
  CHECK(cixl2_region(2.001, 1.0, 2.0) == CixRegion::kUpper);
  CHECK(cixl2_region(1.0, 1.0, 1.0) == CixRegion::kInterval);
}

TEST_CASE("CIXL2 offspring is never between parent and virtual parent") {
  Rng rng(41);
  for (int k = 0; k < 100000; ++k) {
    const double g = rng.uniform(-100, 100);
    const double v = rng.uniform(-100, 100);
    const double c = cixl2_gene(g, v, rng.coin(), rng.uniform());
    REQUIRE((c - g) * (c - v) >= 0.0);
  }
  // Whole offspring in a box wide enough that clamping never fires.
  const SearchDomain narrow = SearchDomain::uniform(5, -1.0, 1.0);
  const SearchDomain wide = SearchDomain::uniform(5, -1e6, 1e6);
  for (int trial = 0; trial < 2000; ++trial) {
    auto pop = random_population(narrow, 15, rng);
    Evaluator eval(kSphere);
    const auto vp = build_virtual_parents(pop, Cixl2Params{5, 0.7}, wide, eval);
    const auto& parent = pop[rng.below(pop.size())];
    const auto child = cixl2_offspring(parent, vp, wide, rng);
    for (std::size_t i = 0; i < 5; ++i) {
      const double g = parent.genes[i];
      double v = vp.cim.genes[i];
      if (g < vp.cill.genes[i]) v = vp.cill.genes[i];
      if (g > vp.ciul.genes[i]) v = vp.ciul.genes[i];
      REQUIRE((child[i] - g) * (child[i] - v) >= 0.0);
    }
  }
}

TEST_CASE("CIXL2 with collapsed virtual parents and a better parent") {
  const SearchDomain wide = SearchDomain::uniform(3, -100.0, 100.0);
  VirtualParents vp;
  vp.cill = vp.ciul = vp.cim = Individual(Genes{1.0, 1.0, 1.0}, 10.0);
  const Individual parent(Genes{2.0, 0.0, 1.0}, 1.0);
  Rng rng(2);
  for (int k = 0; k < 1000; ++k) {
    const auto child = cixl2_offspring(parent, vp, wide, rng);
    CHECK(child[0] >= 2.0);
    CHECK(child[1] <= 0.0);
    CHECK(child[2] == 1.0);
  }
}

TEST_CASE("BLX-alpha ranges") {
  const SearchDomain domain = SearchDomain::uniform(1, -10.0, 10.0);
  Rng rng(7);
  const Genes a = {1.0};
  const Genes b = {3.0};
  double lo = 1e9;
  double hi = -1e9;
  for (int k = 0; k < 100000; ++k) {
    const double g = blx_alpha(a, b, 0.5, domain, rng)[0];
    REQUIRE(g >= 0.0);
    REQUIRE(g <= 4.0);
    lo = std::min(lo, g);
    hi = std::max(hi, g);
    const double flat = blx_alpha(a, b, 0.0, domain, rng)[0];
    REQUIRE(flat >= 1.0);
    REQUIRE(flat <= 3.0);
  }
  CHECK(lo < 0.001);
  CHECK(hi > 3.999);
  CHECK(blx_alpha(a, a, 0.5, domain, rng) == a);
}

TEST_CASE("SBX spread and children") {
  CHECK(sbx_spread(0.5, 2.0) == 1.0);
  CHECK(sbx_spread(0.5, 5.0) == 1.0);
  const auto [c1, c2] = sbx_genes(0.25, 3.0, 1.0);
  CHECK(c1 == 0.25);
  CHECK(c2 == 3.0);
  const SearchDomain domain = SearchDomain::uniform(3, -5.0, 5.0);
  Rng rng(1);
  const Genes same = {0.5, -1.25, 4.0};
  for (int k = 0; k < 1000; ++k) {
    const auto kids = sbx(same, same, 2.0, domain, rng);
    REQUIRE(kids.first == same);
    REQUIRE(kids.second == same);
  }
}

TEST_CASE("SBX children share the parent midpoint") {
  Rng rng(13);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int k = 0; k < 100000; ++k) {
    const double g1 = rng.uniform(-100, 100);
    const double g2 = rng.uniform(-100, 100);
    const double beta = sbx_spread(rng.uniform(), rng.coin() ? 2.0 : 5.0);
    const auto [c1, c2] = sbx_genes(g1, g2, beta);
    // Equal in exact arithmetic; floating point leaves a few ulps.
    const double scale = (1.0 + beta) * (std::fabs(g1) + std::fabs(g2));
    REQUIRE(std::fabs(0.5 * (c1 + c2) - 0.5 * (g1 + g2)) <= 4.0 * eps * scale);
  }
}

TEST_CASE("fuzzy recombination") {
  const SearchDomain domain = SearchDomain::uniform(1, -10.0, 10.0);
  Rng rng(17);
  const Genes a = {0.0};
  const Genes b = {1.0};
  CHECK(fuzzy_recombination(a, a, 0.5, domain, rng) == a);

  // Mixture of two triangles with half-width 0.5 centred at 0 and 1.
  const auto tri_cdf = [](double x, double c, double w) {
    const double z = (x - c) / w;
    if (z <= -1.0) return 0.0;
    if (z >= 1.0) return 1.0;
    return z <= 0.0 ? 0.5 * (1 + z) * (1 + z) : 1.0 - 0.5 * (1 - z) * (1 - z);
  };
  const auto mix_cdf = [&](double x) {
    return 0.5 * tri_cdf(x, 0.0, 0.5) + 0.5 * tri_cdf(x, 1.0, 0.5);
  };
  const int draws = 1000000;
  const int bins = 20;
  std::vector<int> hist(bins, 0);
  double sum = 0.0;
  for (int k = 0; k < draws; ++k) {
    const double g = fuzzy_recombination(a, b, 0.5, domain, rng)[0];
    REQUIRE(g >= -0.5);
    REQUIRE(g <= 1.5);
    sum += g;
    ++hist[std::min(bins - 1, static_cast<int>((g + 0.5) / 0.1))];
  }
  for (int j = 0; j < bins; ++j) {
    const double lo = -0.5 + 0.1 * j;
    const double p = mix_cdf(lo + 0.1) - mix_cdf(lo);
    const double sigma = std::sqrt(draws * p * (1 - p));
    CAPTURE(j);
    CHECK(std::fabs(hist[j] - draws * p) <= 4.0 * sigma + 1.0);
  }
  CHECK(hist[5] > hist[9]);   // bin [0, 0.1) beats [0.4, 0.5)
  CHECK(hist[14] > hist[10]); // bin [0.9, 1.0) beats [0.5, 0.6)
  CHECK(sum / draws == doctest::Approx(0.5).epsilon(0.005));
}

TEST_CASE("UNDX degenerate parents collapse") {
  const SearchDomain domain = SearchDomain::uniform(4, -5.0, 5.0);
  Rng rng(19);
  const Genes p = {1.0, -2.0, 0.5, 3.0};
  CHECK(undx(p, p, p, 0.5, 0.2, domain, rng) == p);
  // p3 on the line: child stays on the line through p1 and p2.
  const Genes p1 = {0.0, 0.0, 0.0, 0.0};
  const Genes p2 = {1.0, 1.0, 0.0, 0.0};
  const Genes p3 = {2.0, 2.0, 0.0, 0.0};
  for (int k = 0; k < 200; ++k) {
    const auto c = undx(p1, p2, p3, 0.5, 0.2, domain, rng);
    CHECK(c[0] == doctest::Approx(c[1]));
    CHECK(c[2] == 0.0);
    CHECK(c[3] == 0.0);
  }
}

TEST_CASE("UNDX moments") {
  const std::size_t p = 5;
  const SearchDomain domain = SearchDomain::uniform(p, -1e3, 1e3);
  const Genes p1 = {1.0, 0.0, 0.0, 0.0, 2.0};
  const Genes p2 = {3.0, 0.0, 0.0, 0.0, 2.0};
  const Genes p3 = {2.0, 1.5, 0.0, 0.0, 2.0};  // D = 1.5 from the line
  const double sx = 0.5;
  const double se = 0.35 / std::sqrt(double(p));
  Rng rng(23);
  const int draws = 100000;
  std::vector<double> sum(p, 0.0), sq(p, 0.0);
  for (int k = 0; k < draws; ++k) {
    const auto c = undx(p1, p2, p3, sx, se, domain, rng);
    for (std::size_t i = 0; i < p; ++i) {
      const double m = 0.5 * (p1[i] + p2[i]);
      sum[i] += c[i] - m;
      sq[i] += (c[i] - m) * (c[i] - m);
    }
  }
  const double dnorm = 2.0;
  const double sd_along = sx * dnorm;
  const double sd_ortho = 1.5 * se;
  for (std::size_t i = 0; i < p; ++i) {
    const double sd = i == 0 ? sd_along : sd_ortho;
    CAPTURE(i);
    CHECK(std::fabs(sum[i] / draws) <= 3.0 * sd / std::sqrt(double(draws)));
    CHECK(std::sqrt(sq[i] / draws) == doctest::Approx(sd).epsilon(0.02));
  }
}

TEST_CASE("every operator keeps offspring in the domain") {
  Rng rng(29);
  for (int trial = 0; trial < 100000; ++trial) {
    const std::size_t p = 1 + rng.below(6);
    std::vector<Bounds> b(p);
    for (auto& bd : b) {
      bd.lower = rng.uniform(-100, 0);
      bd.upper = bd.lower + rng.uniform(0.01, 50);
    }
    const SearchDomain domain(b);
    Genes g1(p), g2(p), g3(p);
    for (std::size_t i = 0; i < p; ++i) {
      // Bias parents onto the bounds to exercise clamping.
      const auto pick = [&] {
        const double u = rng.uniform();
        if (u < 0.2) return domain.lower(i);
        if (u < 0.4) return domain.upper(i);
        return rng.uniform(domain.lower(i), domain.upper(i));
      };
      g1[i] = pick();
      g2[i] = pick();
      g3[i] = pick();
    }
    REQUIRE(domain.contains(blx_alpha(g1, g2, 0.5, domain, rng)));
    const auto kids = sbx(g1, g2, 2.0, domain, rng);
    REQUIRE(domain.contains(kids.first));
    REQUIRE(domain.contains(kids.second));
    REQUIRE(domain.contains(fuzzy_recombination(g1, g2, 0.5, domain, rng)));
    REQUIRE(domain.contains(undx(g1, g2, g3, 0.5, 0.35, domain, rng)));
    VirtualParents vp;
    vp.cill = Individual(g1, rng.uniform());
    vp.ciul = Individual(g2, rng.uniform());
    vp.cim = Individual(g3, rng.uniform());
    for (std::size_t i = 0; i < p; ++i) {
      if (vp.cill.genes[i] > vp.ciul.genes[i]) std::swap(vp.cill.genes[i], vp.ciul.genes[i]);
    }
    REQUIRE(domain.contains(
        cixl2_offspring(Individual(g3, rng.uniform()), vp, domain, rng)));
  }
}

TEST_CASE("operator registry") {
  CHECK(make_crossover("cixl2", 30)->params() == "n=5;confidence=0.7");
  CHECK(make_crossover("blx(0.3)", 30)->params() == "alpha=0.3");
  CHECK(make_crossover("sbx(5)", 30)->params() == "eta=5");
  CHECK(make_crossover("fuzzy", 30)->params() == "d=0.5");
  auto u = make_crossover("undx", 30);
  CHECK(u->prefers_mgg());
  CHECK(u->arity() == 3);
  CHECK(make_crossover("cixl2(10, 0.95)", 30)->params() == "n=10;confidence=0.95");
  CHECK_THROWS_AS(make_crossover("pmx", 30), ConfigError);
  CHECK_THROWS_AS(make_crossover("blx(", 30), ConfigError);
  CHECK_THROWS_AS(make_crossover("cixl2(1,0.7)", 30), ConfigError);
  CHECK_THROWS_AS(make_crossover("cixl2(5,1.5)", 30), ConfigError);
  CHECK_THROWS_AS(make_crossover("sbx(x)", 30), ConfigError);
  try {
    make_crossover("nope", 3);
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("cixl2") != std::string::npos);
  }
  CHECK(crossover_names().size() == 5);
}

TEST_CASE("Cixl2Crossover rebuilds virtual parents in prepare") {
  const SearchDomain domain = SearchDomain::uniform(3, -5.0, 5.0);
  Rng rng(37);
  const auto pop = random_population(domain, 10, rng);
  Cixl2Crossover op;
  Evaluator eval(kSphere);
  op.prepare(pop, domain, eval);
  CHECK(eval.count() == op.prepare_evaluations());
  const Individual* parents[] = {&pop[0]};
  const auto kids = op.mate(parents, domain, rng);
  REQUIRE(kids.size() == 1);
  CHECK(domain.contains(kids[0]));
  auto copy = op.clone();
  CHECK(copy->params() == op.params());
}
