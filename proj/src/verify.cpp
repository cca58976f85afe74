#include "umbral/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>

namespace umbral {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

VerificationReport run_timed(const std::string& name,
                             const std::function<void(CheckResult&)>& body) {
  VerificationReport r;
  r.suite = name;
  const auto t0 = Clock::now();
  CheckResult c;
  body(c);
  r.wall_ms = ms_since(t0);
  r.attempted = c.attempted;
  r.passed = c.passed;
  r.counterexample = c.first_failure;
  return r;
}

std::string case_tag(unsigned d, const MultiIndex& v) {
  return "d=" + std::to_string(d) + " v=" + v.to_string();
}

// Everything the per-v suites need for one dimension, all derived from the
// (possibly perturbed) base series of the config.
struct DimContext {
  unsigned d;
  TupleUmbra<Rat> bern;                 // Bernoulli base tuple
  TupleUmbra<OrderPoly> dotted_bern;    // t-th dot power of the above
  TupleUmbra<OrderPoly> dotted_euler;   // t-th dot power of the Euler base
  TupleUmbra<OrderPoly> euler_part;     // half the dotted Euler-minus-unity tuple
  std::vector<MultiIndex> indices;      // all |v| <= max_degree, lex order
};

DimContext make_dim_context(const ExactSuiteConfig& cfg, unsigned d) {
  const unsigned D = cfg.max_degree;
  const Egf<Rat> bern = truncated(cfg.bernoulli_base, D);
  const Egf<Rat> euler = truncated(cfg.euler_base, D);
  const Egf<Rat> em_u = mul(euler, exp_egf(D, Rat(-1)));
  TupleUmbra<Rat> bern_tuple = make_tuple_umbra(make_umbra(bern, "bernoulli"), d);
  TupleUmbra<OrderPoly> dotted_bern = dot_product_gf(bern_tuple);
  TupleUmbra<OrderPoly> dotted_euler =
      dot_product_gf(make_tuple_umbra(make_umbra(euler, "euler"), d));
  TupleUmbra<OrderPoly> euler_part = scale(
      dot_product_gf(make_tuple_umbra(make_umbra(em_u, "euler-minus-unity"), d)),
      make_rat(1, 2));
  return DimContext{d,
                    std::move(bern_tuple),
                    std::move(dotted_bern),
                    std::move(dotted_euler),
                    std::move(euler_part),
                    indices_up_to_degree(d, D)};
}

}  // namespace

void validate(const MonteCarloConfig& cfg) {
  if (cfg.samples < 10'000)
    throw std::invalid_argument("MonteCarloConfig: need at least 10^4 samples");
  if (cfg.dim == 0) throw std::invalid_argument("MonteCarloConfig: dim must be >= 1");
  if (cfg.shards == 0) throw std::invalid_argument("MonteCarloConfig: shards must be >= 1");
  if (!(cfg.confidence > 0.0))
    throw std::invalid_argument("MonteCarloConfig: confidence must be positive");
}

ExactSuiteConfig ExactSuiteConfig::standard(unsigned max_degree, unsigned max_dim) {
  const unsigned order =
      std::max(2 * max_degree, std::min(max_degree + 2, 8u));
  ExactSuiteConfig cfg{max_degree, max_dim, bernoulli_egf(order), euler_egf(order)};
  return cfg;
}

std::vector<VerificationReport> run_exact_suite(unsigned max_degree, unsigned max_dim) {
  return run_exact_suite(ExactSuiteConfig::standard(max_degree, max_dim));
}

std::vector<VerificationReport> run_exact_suite(const ExactSuiteConfig& cfg) {
  const unsigned D = cfg.max_degree;
  const unsigned needed = std::max(2 * D, std::min(D + 2, 8u));
  if (cfg.bernoulli_base.order() < needed || cfg.euler_base.order() < needed)
    throw std::invalid_argument("run_exact_suite: base series order too small");
  if (cfg.max_dim == 0)
    throw std::invalid_argument("run_exact_suite: max_dim must be >= 1");

  std::vector<DimContext> dims;
  for (unsigned d = 1; d <= cfg.max_dim; ++d) dims.push_back(make_dim_context(cfg, d));

  const OrderPoly t = order_variable();
  const OrderPoly half_t = t * OrderPoly(make_rat(1, 2));
  std::vector<VerificationReport> reports;

  // B^(t) = sum C(v,k) B^(s) B^(t-s), same for the Euler family, checked as
  // two-parameter polynomial identities.
  for (bool euler_family : {false, true}) {
    const char* name =
        euler_family ? "order-convolution-euler" : "order-convolution-bernoulli";
    reports.push_back(run_timed(name, [&](CheckResult& c) {
      const BiOrderPoly s = bi_s();
      const BiOrderPoly t_minus_s = bi_t() - s;
      for (const DimContext& ctx : dims) {
        const auto& dotted = euler_family ? ctx.dotted_euler : ctx.dotted_bern;
        std::vector<BiOrderPoly> at_s(D + 1), at_tms(D + 1), at_t(D + 1);
        for (unsigned j = 0; j <= D; ++j) {
          const OrderPoly& q = dotted.base.moments[j];
          at_s[j] = q.eval(s);
          at_tms[j] = q.eval(t_minus_s);
          at_t[j] = q.eval(bi_t());
        }
        for (const MultiIndex& v : ctx.indices) {
          BiOrderPoly rhs;
          for (const MultiIndex& k : sub_indices(v))
            rhs += BiOrderPoly(Rat(binomial(v, k))) * at_s[k.total_degree()] *
                   at_tms[v.total_degree() - k.total_degree()];
          const BiOrderPoly& lhs = at_t[v.total_degree()];
          bool good = lhs == rhs;
          c.record(good, good ? std::string()
                              : case_tag(ctx.d, v) + ": lhs=" + to_string(lhs) +
                                    " rhs=" + to_string(rhs));
        }
      }
    }));
  }

  // sum C(v,k) B^(s) B^(-s) collapses to 1 at v = 0 and 0 otherwise.
  for (bool euler_family : {false, true}) {
    const char* name = euler_family ? "inverse-order-convolution-euler"
                                    : "inverse-order-convolution-bernoulli";
    reports.push_back(run_timed(name, [&](CheckResult& c) {
      for (const DimContext& ctx : dims) {
        const auto& dotted = euler_family ? ctx.dotted_euler : ctx.dotted_bern;
        std::vector<OrderPoly> q(D + 1), qneg(D + 1);
        for (unsigned j = 0; j <= D; ++j) {
          q[j] = dotted.base.moments[j];
          qneg[j] = negate_order(q[j]);
        }
        for (const MultiIndex& v : ctx.indices) {
          OrderPoly acc;
          for (const MultiIndex& k : sub_indices(v))
            acc += OrderPoly(Rat(binomial(v, k))) * q[k.total_degree()] *
                   qneg[v.total_degree() - k.total_degree()];
          const OrderPoly expect = v.is_zero() ? OrderPoly(1) : OrderPoly();
          bool good = acc == expect;
          c.record(good, good ? std::string()
                              : case_tag(ctx.d, v) + ": got " + to_string(acc));
        }
      }
    }));
  }

  // First-order Bernoulli self-convolution: B_v = sum C(v,k) B_k for |v| > 1.
  reports.push_back(run_timed("bernoulli-first-order-sum", [&](CheckResult& c) {
    const Egf<Rat> a = truncated(cfg.bernoulli_base, D);
    for (const DimContext& ctx : dims) {
      for (const MultiIndex& v : ctx.indices) {
        if (v.total_degree() < 2) continue;
        Rat acc(0);
        for (const MultiIndex& k : sub_indices(v))
          acc += Rat(binomial(v, k)) * a[k.total_degree()];
        bool good = acc == a[v.total_degree()];
        c.record(good, good ? std::string()
                            : case_tag(ctx.d, v) + ": sum=" + rat_to_string(acc) +
                                  " moment=" + rat_to_string(a[v.total_degree()]));
      }
    }
  }));

  // Moment expansion of the Bernoulli polynomial with the order coefficients
  // taken through the partition formula (a genuinely independent route).
  reports.push_back(run_timed("moment-expansion-bernoulli", [&](CheckResult& c) {
    for (const DimContext& ctx : dims) {
      for (const MultiIndex& v : ctx.indices) {
        MvPoly<OrderPoly> lhs = moment_polynomial(ctx.dotted_bern, v);
        MvPoly<OrderPoly> rhs(ctx.d);
        for (const MultiIndex& k : sub_indices(v))
          rhs.add_term(v.minus(k), OrderPoly(Rat(binomial(v, k))) *
                                       dot_product_partition(ctx.bern, k));
        bool good = lhs == rhs;
        c.record(good, good ? std::string()
                            : case_tag(ctx.d, v) + ": lhs=" + to_string(lhs) +
                                  " rhs=" + to_string(rhs));
      }
    }
  }));

  // 2^{|v|} E_v((x + t 1)/2) = sum C(v,k) x^{v-k} (t-th-order Euler numbers).
  reports.push_back(run_timed("euler-scaled-expansion", [&](CheckResult& c) {
    for (const DimContext& ctx : dims) {
      for (const MultiIndex& v : ctx.indices) {
        MvPoly<OrderPoly> lhs =
            affine_substitute(moment_polynomial(ctx.euler_part, v), make_rat(1, 2),
                              half_t)
                .scaled(OrderPoly(pow_rat(Rat(2), v.total_degree())));
        MvPoly<OrderPoly> rhs(ctx.d);
        for (const MultiIndex& k : sub_indices(v))
          rhs.add_term(v.minus(k), OrderPoly(Rat(binomial(v, k))) *
                                       mv_moment(ctx.dotted_euler, k));
        bool good = lhs == rhs;
        c.record(good, good ? std::string()
                            : case_tag(ctx.d, v) + ": lhs=" + to_string(lhs) +
                                  " rhs=" + to_string(rhs));
      }
    }
  }));

  // Constant term of the Bernoulli polynomial recovers the t-th-order number.
  reports.push_back(run_timed("constant-term-bernoulli", [&](CheckResult& c) {
    for (const DimContext& ctx : dims) {
      for (const MultiIndex& v : ctx.indices) {
        OrderPoly got =
            moment_polynomial(ctx.dotted_bern, v).coeff(MultiIndex::zero(ctx.d));
        bool good = got == mv_moment(ctx.dotted_bern, v);
        c.record(good, good ? std::string()
                            : case_tag(ctx.d, v) + ": constant term " + to_string(got));
      }
    }
  }));

  // 2^{|v|} E_v(t/2 * 1) recovers the t-th-order Euler number.
  reports.push_back(run_timed("euler-number-point", [&](CheckResult& c) {
    for (const DimContext& ctx : dims) {
      for (const MultiIndex& v : ctx.indices) {
        MvPoly<OrderPoly> at_point =
            affine_substitute(moment_polynomial(ctx.euler_part, v), Rat(0), half_t);
        OrderPoly got = at_point.coeff(MultiIndex::zero(ctx.d)) *
                        OrderPoly(pow_rat(Rat(2), v.total_degree()));
        bool good = got == mv_moment(ctx.dotted_euler, v);
        c.record(good, good ? std::string()
                            : case_tag(ctx.d, v) + ": got " + to_string(got) +
                                  " expected " +
                                  to_string(mv_moment(ctx.dotted_euler, v)));
      }
    }
  }));

  // Substituting the inverse process for the indeterminates kills every
  // polynomial of positive order (and leaves 1 at v = 0).
  for (bool euler_family : {false, true}) {
    const char* name = euler_family ? "mean-zero-euler" : "mean-zero-bernoulli";
    reports.push_back(run_timed(name, [&](CheckResult& c) {
      for (const DimContext& ctx : dims) {
        const auto& part = euler_family ? ctx.euler_part : ctx.dotted_bern;
        TupleUmbra<OrderPoly> inv = inverse(part);
        for (const MultiIndex& v : ctx.indices) {
          OrderPoly got = umbral_substitute(moment_polynomial(part, v), inv);
          const OrderPoly expect = v.is_zero() ? OrderPoly(1) : OrderPoly();
          bool good = got == expect;
          c.record(good, good ? std::string()
                              : case_tag(ctx.d, v) + ": mean " + to_string(got));
        }
      }
    }));
  }

  // Generating function of the polynomial families, univariate reduction.
  reports.push_back(run_timed("poly-gf", [&](CheckResult& c) {
    c = poly_gf_check(std::min(D + 2, 8u), cfg.bernoulli_base, cfg.euler_base);
  }));

  // Addition theorems and their inverse-order collapse.
  reports.push_back(run_timed("addition-theorem", [&](CheckResult& c) {
    for (const DimContext& ctx : dims) {
      for (const MultiIndex& v : ctx.indices) {
        CheckResult one =
            addition_theorem_check(v, cfg.bernoulli_base, cfg.euler_base);
        c.attempted += one.attempted;
        c.passed += one.passed;
        if (!one.ok() && c.first_failure.empty()) c.first_failure = one.first_failure;
      }
    }
  }));

  // P_v(t*1 - x) = (-1)^{|v|} P_v(x), both families.
  for (bool euler_family : {false, true}) {
    const char* name = euler_family ? "reflection-euler" : "reflection-bernoulli";
    reports.push_back(run_timed(name, [&](CheckResult& c) {
      for (const DimContext& ctx : dims) {
        const auto& part = euler_family ? ctx.euler_part : ctx.dotted_bern;
        for (const MultiIndex& v : ctx.indices) {
          MvPoly<OrderPoly> poly = moment_polynomial(part, v);
          MvPoly<OrderPoly> reflected = affine_substitute(poly, Rat(-1), t);
          MvPoly<OrderPoly> expect =
              v.total_degree() % 2 == 0 ? poly : poly.scaled(OrderPoly(-1));
          bool good = reflected == expect;
          c.record(good, good ? std::string()
                              : case_tag(ctx.d, v) + ": reflected=" +
                                    to_string(reflected));
        }
      }
    }));
  }

  // Series form of the doubling link between the two bases.
  reports.push_back(run_timed("doubling-link", [&](CheckResult& c) {
    c = lemma_c_check(2 * D, cfg.bernoulli_base, cfg.euler_base);
  }));

  // E[E_v(x + dotted Bernoulli)] = 2^{|v|} B_v(x/2).
  reports.push_back(run_timed("family-link", [&](CheckResult& c) {
    for (const DimContext& ctx : dims) {
      for (const MultiIndex& v : ctx.indices) {
        MvPoly<OrderPoly> lhs =
            umbral_shift(moment_polynomial(ctx.euler_part, v), ctx.dotted_bern);
        MvPoly<OrderPoly> rhs =
            affine_substitute(moment_polynomial(ctx.dotted_bern, v), make_rat(1, 2),
                              OrderPoly())
                .scaled(OrderPoly(pow_rat(Rat(2), v.total_degree())));
        bool good = lhs == rhs;
        c.record(good, good ? std::string()
                            : case_tag(ctx.d, v) + ": lhs=" + to_string(lhs) +
                                  " rhs=" + to_string(rhs));
      }
    }
  }));

  return reports;
}

std::vector<VerificationReport> run_oracle_suite(unsigned max_degree, unsigned max_dim) {
  if (max_dim == 0)
    throw std::invalid_argument("run_oracle_suite: max_dim must be >= 1");
  struct Base {
    const char* name;
    TupleUmbra<Rat> (*make)(unsigned, unsigned);
  };
  const Base bases[] = {
      {"bernoulli", &bernoulli_tuple},
      {"euler", &euler_tuple},
      {"unity", &unity_tuple},
      {"euler-minus-unity", &euler_minus_unity_tuple},
  };

  std::vector<VerificationReport> reports;
  for (const Base& base : bases) {
    VerificationReport r;
    r.suite = std::string("oracle-") + base.name;
    const auto t0 = Clock::now();
    for (unsigned d = 1; d <= max_dim; ++d) {
      TupleUmbra<Rat> T = base.make(d, max_degree);

      const auto g0 = Clock::now();
      TupleUmbra<OrderPoly> dotted = dot_product_gf(T);
      std::vector<OrderPoly> gf_values;
      const auto indices = indices_up_to_degree(d, max_degree);
      gf_values.reserve(indices.size());
      for (const MultiIndex& v : indices) gf_values.push_back(mv_moment(dotted, v));
      r.gf_path_ms += ms_since(g0);

      const auto p0 = Clock::now();
      std::vector<OrderPoly> partition_values;
      partition_values.reserve(indices.size());
      for (const MultiIndex& v : indices)
        partition_values.push_back(dot_product_partition(T, v));
      r.partition_path_ms += ms_since(p0);

      for (std::size_t i = 0; i < indices.size(); ++i) {
        ++r.attempted;
        if (gf_values[i] == partition_values[i])
          ++r.passed;
        else if (r.counterexample.empty())
          r.counterexample = std::string(base.name) + " " +
                             case_tag(d, indices[i]) + ": gf=" +
                             to_string(gf_values[i]) + " partition=" +
                             to_string(partition_values[i]);
      }
    }
    r.wall_ms = ms_since(t0);
    reports.push_back(std::move(r));
  }
  return reports;
}

namespace {

struct PowerSums {
  std::vector<double> sum;    // sum of x^m
  std::vector<double> sumsq;  // sum of x^{2m}
};

PowerSums sample_power_sums(const MonteCarloConfig& cfg, bool rademacher) {
  PowerSums s{std::vector<double>(cfg.max_degree + 1, 0.0),
              std::vector<double>(cfg.max_degree + 1, 0.0)};
  for (unsigned shard = 0; shard < cfg.shards; ++shard) {
    SplitMix64 gen(cfg.seed + shard);
    std::uint64_t count = cfg.samples / cfg.shards +
                          (shard < cfg.samples % cfg.shards ? 1 : 0);
    for (std::uint64_t i = 0; i < count; ++i) {
      const double x =
          rademacher ? ((gen.next() & 1u) ? 1.0 : -1.0) : gen.next_double();
      double p = 1.0;
      for (unsigned m = 0; m <= cfg.max_degree; ++m) {
        s.sum[m] += p;
        s.sumsq[m] += p * p;
        p *= x;
      }
    }
  }
  return s;
}

VerificationReport run_montecarlo(const MonteCarloConfig& cfg, bool rademacher,
                                  const std::string& suite,
                                  const TupleUmbra<Rat>& exact_tuple) {
  VerificationReport r;
  r.suite = suite;
  r.rng = kRngName;
  const auto t0 = Clock::now();

  const PowerSums s = sample_power_sums(cfg, rademacher);
  const double n = static_cast<double>(cfg.samples);

  for (const MultiIndex& v : indices_up_to_degree(cfg.dim, cfg.max_degree)) {
    const unsigned m = v.total_degree();
    const double mean = s.sum[m] / n;
    const double variance =
        std::max(0.0, (s.sumsq[m] - n * mean * mean) / (n - 1.0));
    const double sigma = std::sqrt(variance);
    const double exact = mv_moment(exact_tuple, v).get_d();
    const double err = std::abs(mean - exact);
    const double tol = cfg.confidence * sigma / std::sqrt(n);
    ++r.attempted;
    if (err <= tol)
      ++r.passed;
    else if (r.counterexample.empty())
      r.counterexample = "v=" + v.to_string() + ": empirical=" +
                         std::to_string(mean) + " exact=" + std::to_string(exact) +
                         " err=" + std::to_string(err) + " tol=" + std::to_string(tol);
  }
  r.wall_ms = ms_since(t0);
  return r;
}

}  // namespace

VerificationReport run_montecarlo_uniform(const MonteCarloConfig& cfg) {
  validate(cfg);
  TupleUmbra<Rat> inv = at_order(
      inverse(dot_product_gf(bernoulli_tuple(cfg.dim, cfg.max_degree))), Rat(1));
  return run_montecarlo(cfg, false, "montecarlo-uniform", inv);
}

VerificationReport run_montecarlo_rademacher(const MonteCarloConfig& cfg) {
  validate(cfg);
  TupleUmbra<Rat> inv = at_order(
      inverse(dot_product_gf(euler_tuple(cfg.dim, cfg.max_degree))), Rat(1));
  return run_montecarlo(cfg, true, "montecarlo-rademacher", inv);
}

}  // namespace umbral
