#ifndef UMBRAL_EGF_HPP
#define UMBRAL_EGF_HPP

#include <stdexcept>
#include <string_view>
#include <vector>

#include "umbral/dense_poly.hpp"
#include "umbral/rational.hpp"

namespace umbral {

// Truncated exponential generating function over a coefficient ring R.
// Entry n stores n! times the z^n coefficient (the moment convention), so a
// series product is the binomial convolution
//   (fg)_n = sum_k C(n,k) f_k g_{n-k},
// truncated at the fixed order N.
template <class R>
class Egf {
 public:
  explicit Egf(unsigned order) : a_(order + 1, R(0)) {}
  Egf(unsigned order, std::vector<R> coeffs) : a_(std::move(coeffs)) {
    if (a_.size() != order + 1)
      throw std::invalid_argument("Egf: coefficient count != order + 1");
  }

  unsigned order() const { return static_cast<unsigned>(a_.size()) - 1; }

  const R& operator[](unsigned n) const {
    if (n >= a_.size()) throw std::out_of_range("Egf: index beyond truncation");
    return a_[n];
  }
  R& operator[](unsigned n) {
    if (n >= a_.size()) throw std::out_of_range("Egf: index beyond truncation");
    return a_[n];
  }

  const std::vector<R>& coeffs() const { return a_; }

  friend bool operator==(const Egf&, const Egf&) = default;

 private:
  std::vector<R> a_;
};

namespace detail {
template <class R>
void require_same_order(const Egf<R>& f, const Egf<R>& g, const char* what) {
  if (f.order() != g.order())
    throw std::invalid_argument(std::string(what) + ": truncation order mismatch");
}

// Multiplicative inverse of a unit coefficient. Rationals invert when
// nonzero; polynomial rings only when constant.
inline Rat unit_inverse(const Rat& c) {
  if (is_zero(c)) throw std::domain_error("Egf: constant term not invertible");
  return Rat(1) / c;
}
template <class S>
DensePoly<S> unit_inverse(const DensePoly<S>& c) {
  if (c.degree() > 0)
    throw std::domain_error("Egf: constant term not a unit in the coefficient ring");
  return DensePoly<S>(unit_inverse(c.coeff(0)));
}
}  // namespace detail

template <class R>
Egf<R> mul(const Egf<R>& f, const Egf<R>& g) {
  detail::require_same_order(f, g, "mul");
  const unsigned N = f.order();
  Egf<R> h(N);
  for (unsigned n = 0; n <= N; ++n) {
    R acc(0);
    for (unsigned k = 0; k <= n; ++k)
      acc = acc + f[k] * g[n - k] * R(Rat(binomial_int(n, k)));
    h[n] = acc;
  }
  return h;
}

// g with mul(f, g) = identity series, requiring f_0 to be a unit.
template <class R>
Egf<R> reciprocal(const Egf<R>& f) {
  const unsigned N = f.order();
  Egf<R> g(N);
  R inv0 = detail::unit_inverse(f[0]);
  g[0] = inv0;
  for (unsigned n = 1; n <= N; ++n) {
    R acc(0);
    for (unsigned k = 1; k <= n; ++k)
      acc = acc + f[k] * g[n - k] * R(Rat(binomial_int(n, k)));
    g[n] = R(0) - inv0 * acc;
  }
  return g;
}

// Formal log of f with f_0 = 1, via f' = f (log f)' which stays division
// free: g_{n+1} = f_{n+1} - sum_{k=1..n} C(n,k) f_k g_{n-k+1}.
template <class R>
Egf<R> log1(const Egf<R>& f) {
  if (!(f[0] == R(1))) throw std::domain_error("log1: requires constant term 1");
  const unsigned N = f.order();
  Egf<R> g(N);
  for (unsigned n = 0; n + 1 <= N; ++n) {
    R acc = f[n + 1];
    for (unsigned k = 1; k <= n; ++k)
      acc = acc - f[k] * g[n - k + 1] * R(Rat(binomial_int(n, k)));
    g[n + 1] = acc;
  }
  return g;
}

// Formal exp of g with g_0 = 0: f_{n+1} = sum_{k=0..n} C(n,k) f_k g_{n-k+1}.
template <class R>
Egf<R> exp0(const Egf<R>& g) {
  if (!(g[0] == R(0))) throw std::domain_error("exp0: requires constant term 0");
  const unsigned N = g.order();
  Egf<R> f(N);
  f[0] = R(1);
  for (unsigned n = 0; n + 1 <= N; ++n) {
    R acc(0);
    for (unsigned k = 0; k <= n; ++k)
      acc = acc + f[k] * g[n - k + 1] * R(Rat(binomial_int(n, k)));
    f[n + 1] = acc;
  }
  return f;
}

// Argument scaling f(z) -> f(cz): a_n -> c^n a_n.
template <class R>
Egf<R> scale_arg(const Egf<R>& f, const Rat& c) {
  const unsigned N = f.order();
  Egf<R> g(N);
  Rat cn(1);
  for (unsigned n = 0; n <= N; ++n) {
    g[n] = f[n] * R(cn);
    cn *= c;
  }
  return g;
}

// Cut a series down to a lower truncation order.
template <class R>
Egf<R> truncated(const Egf<R>& f, unsigned order) {
  if (order > f.order())
    throw std::invalid_argument("truncated: target order beyond source");
  Egf<R> g(order);
  for (unsigned n = 0; n <= order; ++n) g[n] = f[n];
  return g;
}

template <class R>
Egf<R> pow_int(const Egf<R>& f, unsigned e) {
  Egf<R> r(f.order());
  r[0] = R(1);
  for (unsigned i = 0; i < e; ++i) r = mul(r, f);
  return r;
}

// [f(z)]^t with a symbolic exponent: exp(t log f), coefficients in Q[t].
// Requires f_0 = 1; the n-th coefficient has t-degree <= n.
Egf<OrderPoly> power_t(const Egf<Rat>& f);

// Specialize an order-parametric series at a rational order.
Egf<Rat> at_order(const Egf<OrderPoly>& f, const Rat& t);

// Named series from the umbral toolbox, all exact at the given order:
//   bernoulli     z/(e^z - 1)         moments are the Bernoulli numbers
//   euler         2e^z/(e^{2z} + 1)   moments are the Euler numbers
//   unity         e^z                 all moments 1
//   expm1_over_z  (e^z - 1)/z         moments 1/(n+1)
Egf<Rat> bernoulli_egf(unsigned order);
Egf<Rat> euler_egf(unsigned order);
Egf<Rat> unity_egf(unsigned order);
Egf<Rat> expm1_over_z_egf(unsigned order);
// moments (1, 0, 0, ...): the series identity element
Egf<Rat> identity_egf(unsigned order);
// e^{cz}: moments c^n
Egf<Rat> exp_egf(unsigned order, const Rat& c);

// String-keyed access to the four named series above; throws on unknown names.
Egf<Rat> builtin_egf(std::string_view name, unsigned order);

}  // namespace umbral

#endif
