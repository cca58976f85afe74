#include "umbral/egf.hpp"

namespace umbral {

Egf<OrderPoly> power_t(const Egf<Rat>& f) {
  if (f[0] != Rat(1)) throw std::domain_error("power_t: requires constant term 1");
  Egf<Rat> lg = log1(f);
  const unsigned N = f.order();
  Egf<OrderPoly> tlog(N);
  const OrderPoly t = order_variable();
  for (unsigned n = 1; n <= N; ++n) tlog[n] = t * OrderPoly(lg[n]);
  return exp0(tlog);
}

Egf<Rat> at_order(const Egf<OrderPoly>& f, const Rat& t) {
  Egf<Rat> g(f.order());
  for (unsigned n = 0; n <= f.order(); ++n) g[n] = f[n].eval(t);
  return g;
}

Egf<Rat> expm1_over_z_egf(unsigned order) {
  Egf<Rat> f(order);
  for (unsigned n = 0; n <= order; ++n) f[n] = make_rat(1, static_cast<long>(n) + 1);
  return f;
}

Egf<Rat> bernoulli_egf(unsigned order) { return reciprocal(expm1_over_z_egf(order)); }

Egf<Rat> euler_egf(unsigned order) {
  // reciprocal of cosh z = (e^z + e^{-z})/2, whose moments alternate 1, 0
  Egf<Rat> cosh(order);
  for (unsigned n = 0; n <= order; n += 2) cosh[n] = Rat(1);
  return reciprocal(cosh);
}

Egf<Rat> unity_egf(unsigned order) { return exp_egf(order, Rat(1)); }

Egf<Rat> identity_egf(unsigned order) {
  Egf<Rat> f(order);
  f[0] = Rat(1);
  return f;
}

Egf<Rat> exp_egf(unsigned order, const Rat& c) {
  Egf<Rat> f(order);
  Rat cn(1);
  for (unsigned n = 0; n <= order; ++n) {
    f[n] = cn;
    cn *= c;
  }
  return f;
}

Egf<Rat> builtin_egf(std::string_view name, unsigned order) {
  if (name == "bernoulli") return bernoulli_egf(order);
  if (name == "euler") return euler_egf(order);
  if (name == "unity") return unity_egf(order);
  if (name == "expm1_over_z") return expm1_over_z_egf(order);
  throw std::invalid_argument("builtin_egf: unknown series '" + std::string(name) + "'");
}

}  // namespace umbral
