#ifndef UMBRAL_UMBRA_HPP
#define UMBRAL_UMBRA_HPP

#include <stdexcept>
#include <string>

#include "umbral/egf.hpp"
#include "umbral/multi_index.hpp"
#include "umbral/partition.hpp"

namespace umbral {

// An umbra is its moment sequence: moments[n] plays E[alpha^n], with
// moments[0] = 1. Two umbrae compare similar iff the truncated sequences
// agree. The label is carried for diagnostics only.
template <class R>
struct Umbra {
  Egf<R> moments;
  std::string label;
};

template <class R>
Umbra<R> make_umbra(Egf<R> moments, std::string label) {
  if (!(moments[0] == R(1)))
    throw std::invalid_argument("make_umbra: moment 0 must be 1 (" + label + ")");
  return Umbra<R>{std::move(moments), std::move(label)};
}

// The d-tuple with all components equal to one base umbra (or an auxiliary
// umbra derived from such a tuple). Its multivariate moment at v depends on
// v only through |v|: E[tuple^v] = base moment |v|.
template <class R>
struct TupleUmbra {
  Umbra<R> base;
  unsigned dim = 1;

  unsigned order() const { return base.moments.order(); }
};

template <class R>
TupleUmbra<R> make_tuple_umbra(Umbra<R> base, unsigned dim) {
  if (dim == 0) throw std::invalid_argument("make_tuple_umbra: dim must be >= 1");
  return TupleUmbra<R>{std::move(base), dim};
}

// E[T^v]; errors when |v| exceeds the truncation or dimensions differ.
template <class R>
R mv_moment(const TupleUmbra<R>& T, const MultiIndex& v) {
  if (v.dimension() != T.dim)
    throw std::invalid_argument("mv_moment: dimension mismatch");
  const unsigned deg = v.total_degree();
  if (deg > T.order()) throw std::out_of_range("mv_moment: |v| beyond truncation");
  return T.base.moments[deg];
}

// ---- base tuples ----------------------------------------------------------

TupleUmbra<Rat> bernoulli_tuple(unsigned dim, unsigned order);
TupleUmbra<Rat> euler_tuple(unsigned dim, unsigned order);
TupleUmbra<Rat> unity_tuple(unsigned dim, unsigned order);
// moments (1, 0, 0, ...): the additive identity for tuple sums
TupleUmbra<Rat> epsilon_tuple(unsigned dim, unsigned order);
// Euler base shifted down by the unity umbra: moments are the binomial
// convolution of the Euler moments with (-1)^n, g.f. f(eta, z) e^{-z}.
TupleUmbra<Rat> euler_minus_unity_tuple(unsigned dim, unsigned order);

// ---- auxiliary-umbra constructions ----------------------------------------

// Dot power with symbolic order via the generating function: the base moment
// series becomes [f]^t over Q[t]. mv_moment of the result at v is the
// t-th-order number attached to the base (Bernoulli, Euler, ...).
TupleUmbra<OrderPoly> dot_product_gf(const TupleUmbra<Rat>& T);

// The same multivariate moment through the multi-index-partition expansion:
//   q_v(t) = sum over partitions lambda of v of
//            v!/(m(lambda)! lambda!) * (t)_{l(lambda)} * prod_i g_{lambda_i}^{r_i}
// Exponentially slower than the g.f. route; kept as an independent oracle
// and benchmarking surface. The zero index yields the constant 1 (the empty
// partition's contribution).
OrderPoly dot_product_partition(const TupleUmbra<Rat>& T, const MultiIndex& v);

// c * T: moments a_n -> c^n a_n.
template <class R>
TupleUmbra<R> scale(const TupleUmbra<R>& T, const Rat& c) {
  return TupleUmbra<R>{
      Umbra<R>{scale_arg(T.base.moments, c), "scaled(" + T.base.label + ")"}, T.dim};
}

// Sum of uncorrelated tuples: base g.f.s multiply (binomial convolution of
// the moment sequences).
template <class R>
TupleUmbra<R> sum(const TupleUmbra<R>& a, const TupleUmbra<R>& b) {
  if (a.dim != b.dim) throw std::invalid_argument("sum: dimension mismatch");
  return TupleUmbra<R>{
      Umbra<R>{mul(a.base.moments, b.base.moments), a.base.label + "+" + b.base.label},
      a.dim};
}

// Inverse of a dotted tuple: substitutes t -> -t, so sum(inverse(T), T) is
// similar to the epsilon tuple.
TupleUmbra<OrderPoly> inverse(const TupleUmbra<OrderPoly>& T);

// Specialize the symbolic order at a rational value.
TupleUmbra<Rat> at_order(const TupleUmbra<OrderPoly>& T, const Rat& t);

}  // namespace umbral

#endif
