#include "umbral/umbra.hpp"

namespace umbral {

TupleUmbra<Rat> bernoulli_tuple(unsigned dim, unsigned order) {
  return make_tuple_umbra(make_umbra(bernoulli_egf(order), "bernoulli"), dim);
}

TupleUmbra<Rat> euler_tuple(unsigned dim, unsigned order) {
  return make_tuple_umbra(make_umbra(euler_egf(order), "euler"), dim);
}

TupleUmbra<Rat> unity_tuple(unsigned dim, unsigned order) {
  return make_tuple_umbra(make_umbra(unity_egf(order), "unity"), dim);
}

TupleUmbra<Rat> epsilon_tuple(unsigned dim, unsigned order) {
  return make_tuple_umbra(make_umbra(identity_egf(order), "epsilon"), dim);
}

TupleUmbra<Rat> euler_minus_unity_tuple(unsigned dim, unsigned order) {
  Egf<Rat> m = mul(euler_egf(order), exp_egf(order, Rat(-1)));
  return make_tuple_umbra(make_umbra(std::move(m), "euler-minus-unity"), dim);
}

TupleUmbra<OrderPoly> dot_product_gf(const TupleUmbra<Rat>& T) {
  return TupleUmbra<OrderPoly>{
      Umbra<OrderPoly>{power_t(T.base.moments), "t." + T.base.label}, T.dim};
}

OrderPoly dot_product_partition(const TupleUmbra<Rat>& T, const MultiIndex& v) {
  if (v.dimension() != T.dim)
    throw std::invalid_argument("dot_product_partition: dimension mismatch");
  const unsigned deg = v.total_degree();
  if (deg > T.order())
    throw std::out_of_range("dot_product_partition: |v| beyond truncation");
  if (deg == 0) return OrderPoly(1);

  const Egf<Rat>& a = T.base.moments;
  const Rat v_fact(v.factorial());
  const OrderPoly t = order_variable();

  // (t)_0 .. (t)_{|v|}: partition lengths never exceed |v|
  std::vector<OrderPoly> lower(deg + 1);
  lower[0] = OrderPoly(1);
  for (unsigned l = 1; l <= deg; ++l)
    lower[l] = lower[l - 1] * (t - OrderPoly(Rat(static_cast<long>(l) - 1)));

  OrderPoly total;
  for (const MultiIndexPartition& lambda : partitions(v)) {
    Rat weight = v_fact / Rat(lambda.multiplicity_factorial() * lambda.column_factorial());
    const auto& cols = lambda.columns();
    const auto& mults = lambda.multiplicities();
    for (std::size_t i = 0; i < cols.size(); ++i)
      weight *= pow_rat(a[cols[i].total_degree()], mults[i]);
    total += lower[lambda.length()] * OrderPoly(weight);
  }
  return total;
}

TupleUmbra<OrderPoly> inverse(const TupleUmbra<OrderPoly>& T) {
  Egf<OrderPoly> m(T.order());
  for (unsigned n = 0; n <= T.order(); ++n) m[n] = negate_order(T.base.moments[n]);
  return TupleUmbra<OrderPoly>{
      Umbra<OrderPoly>{std::move(m), "inverse(" + T.base.label + ")"}, T.dim};
}

TupleUmbra<Rat> at_order(const TupleUmbra<OrderPoly>& T, const Rat& t) {
  return TupleUmbra<Rat>{
      Umbra<Rat>{at_order(T.base.moments, t),
                 T.base.label + "@" + rat_to_string(t)},
      T.dim};
}

}  // namespace umbral
