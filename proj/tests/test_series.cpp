#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "umbral/egf.hpp"

using namespace umbral;
using test_oracles::bernoulli_by_recurrence;
using test_oracles::euler_by_recurrence;

namespace {
const unsigned N = 12;
}  // namespace

TEST_CASE("binomial-convolution product") {
  Egf<Rat> ez = exp_egf(N, Rat(1));
  Egf<Rat> emz = exp_egf(N, Rat(-1));
  CHECK(mul(ez, emz) == identity_egf(N));
  CHECK(mul(ez, ez) == exp_egf(N, Rat(2)));
  CHECK(mul(bernoulli_egf(N), expm1_over_z_egf(N)) == identity_egf(N));
  CHECK_THROWS_AS(mul(ez, exp_egf(6, Rat(1))), std::invalid_argument);
}

TEST_CASE("reciprocal reproduces the Bernoulli numbers") {
  Egf<Rat> bern = reciprocal(expm1_over_z_egf(N));
  const auto oracle = bernoulli_by_recurrence(N);
  for (unsigned n = 0; n <= N; ++n) CHECK(bern[n] == oracle[n]);
  CHECK(bern[0] == 1);
  CHECK(bern[1] == make_rat(-1, 2));
  CHECK(bern[2] == make_rat(1, 6));
  CHECK(bern[3] == 0);
  CHECK(bern[4] == make_rat(-1, 30));

  CHECK(reciprocal(identity_egf(N)) == identity_egf(N));
  CHECK(reciprocal(exp_egf(N, Rat(1))) == exp_egf(N, Rat(-1)));
  Egf<Rat> singular(N);
  CHECK_THROWS_AS(reciprocal(singular), std::domain_error);
}

TEST_CASE("named series") {
  Egf<Rat> euler = euler_egf(N);
  const auto oracle = euler_by_recurrence(N);
  for (unsigned n = 0; n <= N; ++n) CHECK(euler[n] == oracle[n]);
  CHECK(euler[0] == 1);
  CHECK(euler[1] == 0);
  CHECK(euler[2] == -1);
  CHECK(euler[3] == 0);
  CHECK(euler[4] == 5);

  for (unsigned n = 0; n <= N; ++n) CHECK(unity_egf(N)[n] == 1);
  CHECK(builtin_egf("bernoulli", 4) == bernoulli_egf(4));
  CHECK_THROWS_AS(builtin_egf("gamma", 4), std::invalid_argument);
}

TEST_CASE("formal log and exp") {
  CHECK(log1(identity_egf(N)) == Egf<Rat>(N));
  Egf<Rat> z_only(N);
  z_only[1] = Rat(1);
  CHECK(exp0(z_only) == exp_egf(N, Rat(1)));
  Egf<Rat> bern = bernoulli_egf(N);
  CHECK(exp0(log1(bern)) == bern);
  CHECK_THROWS_AS(log1(Egf<Rat>(N)), std::domain_error);
  CHECK_THROWS_AS(exp0(bern), std::domain_error);
}

TEST_CASE("symbolic power requires constant term 1") {
  Egf<Rat> doubled(N);
  doubled[0] = Rat(2);
  CHECK_THROWS_AS(power_t(doubled), std::domain_error);
}

TEST_CASE("symbolic power of the Bernoulli series") {
  Egf<OrderPoly> bt = power_t(bernoulli_egf(N));
  // frozen from the partition expansion: (t)_1 * (-1/2)
  CHECK(bt[1] == OrderPoly(std::vector<Rat>{Rat(0), make_rat(-1, 2)}));
  // (t)_1 * 1/6 + (t)_2 * 1/4 = (3t^2 - t)/12
  CHECK(bt[2] == OrderPoly(std::vector<Rat>{Rat(0), make_rat(-1, 12), make_rat(1, 4)}));
  CHECK(at_order(bt, Rat(0)) == identity_egf(N));
}

TEST_CASE("integer specializations of the symbolic power agree with products") {
  for (const Egf<Rat>& f : {bernoulli_egf(N), euler_egf(N), unity_egf(N)}) {
    Egf<OrderPoly> ft = power_t(f);
    CHECK(at_order(ft, Rat(1)) == f);
    CHECK(at_order(ft, Rat(2)) == mul(f, f));
    CHECK(at_order(ft, Rat(3)) == mul(f, mul(f, f)));
    CHECK(at_order(ft, Rat(-1)) == reciprocal(f));
  }
}

TEST_CASE("symbolic power commutes with argument scaling") {
  Egf<Rat> f = bernoulli_egf(N);
  for (const Rat& c : {Rat(2), make_rat(1, 2), Rat(-1)})
    CHECK(power_t(scale_arg(f, c)) == scale_arg(power_t(f), c));
}

TEST_CASE("symbolic power distributes over series products") {
  Egf<Rat> f = bernoulli_egf(N);
  Egf<Rat> g = euler_egf(N);
  CHECK(power_t(mul(f, g)) == mul(power_t(f), power_t(g)));
}

TEST_CASE("rational order addition at the series level") {
  Egf<OrderPoly> ft = power_t(bernoulli_egf(N));
  for (auto [s, u] : {std::pair{make_rat(1, 2), make_rat(3, 2)},
                      std::pair{make_rat(-2, 3), make_rat(1, 3)}}) {
    CHECK(mul(at_order(ft, s), at_order(ft, u)) == at_order(ft, s + u));
  }
}

TEST_CASE("symbolic power coefficient degrees stay below the index") {
  for (const Egf<Rat>& f : {bernoulli_egf(N), euler_egf(N)}) {
    Egf<OrderPoly> ft = power_t(f);
    for (unsigned n = 0; n <= N; ++n) CHECK(ft[n].degree() <= static_cast<int>(n));
  }
}

TEST_CASE("argument scaling") {
  Egf<Rat> bern = bernoulli_egf(N);
  CHECK(scale_arg(bern, Rat(1)) == bern);
  CHECK(scale_arg(bern, Rat(2))[2] == make_rat(2, 3));

  // half of the Euler-minus-unity series is 2/(e^z + 1): check against an
  // independent reciprocal of (e^z + 1)/2
  Egf<Rat> em_u = mul(euler_egf(N), exp_egf(N, Rat(-1)));
  Egf<Rat> half(N);
  half[0] = Rat(1);
  for (unsigned n = 1; n <= N; ++n) half[n] = make_rat(1, 2);
  CHECK(scale_arg(em_u, make_rat(1, 2)) == reciprocal(half));
}

TEST_CASE("truncation helper") {
  Egf<Rat> bern = bernoulli_egf(N);
  Egf<Rat> low = truncated(bern, 4);
  CHECK(low.order() == 4);
  for (unsigned n = 0; n <= 4; ++n) CHECK(low[n] == bern[n]);
  CHECK_THROWS_AS(truncated(low, 8), std::invalid_argument);
}
