#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umbral/verify.hpp"

using namespace umbral;

TEST_CASE("exact battery passes on the true moment sequences") {
  for (const VerificationReport& r : run_exact_suite(4, 2)) {
    CAPTURE(r.suite);
    CAPTURE(r.counterexample);
    CHECK(r.ok());
    CHECK(r.attempted > 0);
  }
}

TEST_CASE("exact battery at degree zero degenerates but passes") {
  for (const VerificationReport& r : run_exact_suite(0, 1)) {
    CAPTURE(r.suite);
    CHECK(r.ok());
  }
}

TEST_CASE("oracle suite agrees and reports per-path timing") {
  auto reports = run_oracle_suite(5, 2);
  REQUIRE(reports.size() == 4);
  for (const VerificationReport& r : reports) {
    CAPTURE(r.suite);
    CHECK(r.ok());
    CHECK(r.attempted == 6 + 21);  // d = 1 and d = 2 index counts
    CHECK(r.gf_path_ms >= 0.0);
    CHECK(r.partition_path_ms >= 0.0);
  }
}

TEST_CASE("a corrupted base moment trips the battery") {
  ExactSuiteConfig cfg = ExactSuiteConfig::standard(4, 2);
  cfg.bernoulli_base[2] += 1;
  unsigned failures = 0;
  std::string detail;
  for (const VerificationReport& r : run_exact_suite(cfg)) {
    if (!r.ok()) {
      ++failures;
      if (detail.empty()) detail = r.suite + ": " + r.counterexample;
    }
  }
  CAPTURE(detail);
  CHECK(failures >= 1);

  // the counterexample names a concrete low-degree case
  bool low_degree_hit = false;
  for (const VerificationReport& r : run_exact_suite(cfg)) {
    if (r.suite == "bernoulli-first-order-sum") {
      CHECK_FALSE(r.ok());
      low_degree_hit = r.counterexample.find("v=(3)") != std::string::npos;
    }
  }
  CHECK(low_degree_hit);
}

TEST_CASE("every stored base moment is load-bearing") {
  // bumping any single moment (beyond index 0, which the umbra constructor
  // itself rejects) must make some suite fail
  const ExactSuiteConfig reference = ExactSuiteConfig::standard(4, 2);
  const unsigned order = reference.bernoulli_base.order();
  for (bool euler : {false, true}) {
    for (unsigned idx = 1; idx <= order; ++idx) {
      ExactSuiteConfig cfg = reference;
      (euler ? cfg.euler_base : cfg.bernoulli_base)[idx] += 1;
      bool tripped = false;
      for (const VerificationReport& r : run_exact_suite(cfg))
        tripped = tripped || !r.ok();
      CAPTURE(euler);
      CAPTURE(idx);
      CHECK(tripped);
    }
  }
}

TEST_CASE("Monte Carlo configuration validation") {
  MonteCarloConfig bad;
  bad.samples = 100;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = MonteCarloConfig{};
  bad.dim = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = MonteCarloConfig{};
  bad.shards = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  CHECK_THROWS_AS(run_montecarlo_uniform(MonteCarloConfig{100, 1, 1, 2, 4.0, 1}),
                  std::invalid_argument);
}

TEST_CASE("Monte Carlo suites pass and reproduce exactly") {
  MonteCarloConfig cfg;
  cfg.samples = 50'000;
  cfg.seed = 42;
  cfg.dim = 2;
  cfg.max_degree = 4;

  VerificationReport u1 = run_montecarlo_uniform(cfg);
  VerificationReport u2 = run_montecarlo_uniform(cfg);
  CHECK(u1.ok());
  CHECK(u1.rng == std::string(kRngName));
  CHECK(u1.attempted == 15);
  CHECK(u1.attempted == u2.attempted);
  CHECK(u1.passed == u2.passed);
  CHECK(u1.counterexample == u2.counterexample);

  VerificationReport r1 = run_montecarlo_rademacher(cfg);
  CHECK(r1.ok());
  CHECK(r1.attempted == 15);
}

TEST_CASE("sharded sampling stays within tolerance") {
  MonteCarloConfig cfg;
  cfg.samples = 40'000;
  cfg.seed = 42;
  cfg.dim = 2;
  for (unsigned shards : {1u, 2u, 4u}) {
    cfg.shards = shards;
    VerificationReport r = run_montecarlo_uniform(cfg);
    CAPTURE(shards);
    CHECK(r.ok());
  }
}

TEST_CASE("an absurdly tight confidence bound is reported as a failure") {
  MonteCarloConfig cfg;
  cfg.samples = 10'000;
  cfg.seed = 42;
  cfg.dim = 1;
  cfg.confidence = 1e-9;
  VerificationReport r = run_montecarlo_uniform(cfg);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.counterexample.empty());
}

TEST_CASE("different seeds draw different samples, same verdict") {
  MonteCarloConfig a;
  a.samples = 50'000;
  a.seed = 1;
  MonteCarloConfig b = a;
  b.seed = 2;
  CHECK(run_montecarlo_uniform(a).ok());
  CHECK(run_montecarlo_uniform(b).ok());
}

TEST_CASE("splitmix64 reference outputs") {
  // first outputs for seed 1234567, cross-checked against the published
  // reference implementation
  SplitMix64 gen(1234567);
  CHECK(gen.next() == 6457827717110365317ULL);
  CHECK(gen.next() == 3203168211198807973ULL);
  SplitMix64 unit(0);
  const double x = unit.next_double();
  CHECK(x >= 0.0);
  CHECK(x < 1.0);
}
