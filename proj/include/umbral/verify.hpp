#ifndef UMBRAL_VERIFY_HPP
#define UMBRAL_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "umbral/egf.hpp"
#include "umbral/mv_poly.hpp"
#include "umbral/umbra.hpp"

namespace umbral {

struct VerificationReport {
  std::string suite;
  std::uint64_t attempted = 0;
  std::uint64_t passed = 0;
  // inputs and both sides of the first failing case; empty iff all passed
  std::string counterexample;
  double wall_ms = 0.0;
  // generator name, recorded by the Monte Carlo suites
  std::string rng;
  // per-path timing, recorded by the oracle suite
  double partition_path_ms = 0.0;
  double gf_path_ms = 0.0;

  bool ok() const { return passed == attempted; }
};

struct MonteCarloConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  unsigned dim = 1;
  unsigned max_degree = 4;
  double confidence = 4.0;
  // shard s draws from sub-seed seed + s; the merged result is deterministic
  // for a fixed shard count
  unsigned shards = 1;
};

// Throws std::invalid_argument when outside the supported ranges
// (samples >= 10^4, dim >= 1, shards >= 1, confidence > 0).
void validate(const MonteCarloConfig& cfg);

// Splittable counter-based generator (SplittableRandom finalizer). Kept tiny
// and local so runs are reproducible across toolchains.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1) with 53 random bits
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

inline constexpr const char* kRngName = "splitmix64";

// Inputs for the exact identity battery. The base moment series are explicit
// so mutation tests can perturb a single stored moment and watch the battery
// catch it; standard() fills them with the exact builtin series at an order
// covering every sub-suite of a (max_degree, max_dim) run.
struct ExactSuiteConfig {
  unsigned max_degree = 4;
  unsigned max_dim = 2;
  Egf<Rat> bernoulli_base;
  Egf<Rat> euler_base;

  static ExactSuiteConfig standard(unsigned max_degree, unsigned max_dim);
};

// One report per identity family; exact arithmetic, zero tolerance.
std::vector<VerificationReport> run_exact_suite(const ExactSuiteConfig& cfg);
std::vector<VerificationReport> run_exact_suite(unsigned max_degree, unsigned max_dim);

// Partition-formula path versus generating-function path for every base and
// every v with |v| <= max_degree, d <= max_dim; one report per base, with
// wall time split between the two paths.
std::vector<VerificationReport> run_oracle_suite(unsigned max_degree, unsigned max_dim);

// Empirical moments of (U,...,U), U uniform on (0,1), against the exact
// moments of the inverse dotted Bernoulli tuple at order 1.
VerificationReport run_montecarlo_uniform(const MonteCarloConfig& cfg);

// Empirical moments of (X,...,X), X = 2Y - 1 with Y Bernoulli(1/2), against
// the exact moments of the inverse dotted Euler tuple at order 1.
VerificationReport run_montecarlo_rademacher(const MonteCarloConfig& cfg);

}  // namespace umbral

#endif
