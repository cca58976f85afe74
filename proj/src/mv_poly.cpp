#include "umbral/mv_poly.hpp"

#include <utility>

namespace umbral {

namespace {

OrderPoly pow_poly(const OrderPoly& p, unsigned e) {
  OrderPoly r(1);
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

MvPoly<OrderPoly> substitute_negated_order(const MvPoly<OrderPoly>& p) {
  MvPoly<OrderPoly> r(p.dimension());
  for (const auto& [w, c] : p.terms()) r.add_term(w, negate_order(c));
  return r;
}

// P(x) in d variables lifted into the 2d-variable ring over Q[s][t]; the y
// copy also renames the order parameter t to s.
MvPoly<BiOrderPoly> lift_xy(const MvPoly<OrderPoly>& p, bool to_y) {
  const unsigned d = p.dimension();
  MvPoly<BiOrderPoly> r(2 * d);
  for (const auto& [w, c] : p.terms()) {
    std::vector<unsigned> e(2 * d, 0);
    for (unsigned i = 0; i < d; ++i) e[(to_y ? d : 0) + i] = w[i];
    r.add_term(MultiIndex(std::move(e)), to_y ? rename_order_to_s(c) : BiOrderPoly(c));
  }
  return r;
}

// prod_i (x_i + y_i)^{w_i} expanded in the 2d-variable ring.
MvPoly<BiOrderPoly> xy_power(const MultiIndex& w) {
  const unsigned d = w.dimension();
  MvPoly<BiOrderPoly> acc = MvPoly<BiOrderPoly>::constant(2 * d, BiOrderPoly(1));
  for (unsigned i = 0; i < d; ++i) {
    if (w[i] == 0) continue;
    MvPoly<BiOrderPoly> factor(2 * d);
    for (unsigned j = 0; j <= w[i]; ++j) {
      std::vector<unsigned> e(2 * d, 0);
      e[i] = j;
      e[d + i] = w[i] - j;
      factor.add_term(MultiIndex(std::move(e)), BiOrderPoly(Rat(binomial_int(w[i], j))));
    }
    acc *= factor;
  }
  return acc;
}

}  // namespace

MvPoly<OrderPoly> moment_polynomial(const TupleUmbra<OrderPoly>& T, const MultiIndex& v) {
  if (v.dimension() != T.dim)
    throw std::invalid_argument("moment_polynomial: dimension mismatch");
  if (v.total_degree() > T.order())
    throw std::out_of_range("moment_polynomial: |v| beyond truncation");
  MvPoly<OrderPoly> p(v.dimension());
  for (const MultiIndex& k : sub_indices(v))
    p.add_term(v.minus(k), OrderPoly(Rat(binomial(v, k))) * mv_moment(T, k));
  return p;
}

MvPoly<OrderPoly> bernoulli_polynomial(const MultiIndex& v, unsigned order) {
  if (v.total_degree() > order)
    throw std::out_of_range("bernoulli_polynomial: |v| beyond truncation");
  return moment_polynomial(dot_product_gf(bernoulli_tuple(v.dimension(), order)), v);
}

MvPoly<OrderPoly> bernoulli_polynomial(const MultiIndex& v) {
  return bernoulli_polynomial(v, v.total_degree());
}

MvPoly<OrderPoly> euler_polynomial(const MultiIndex& v, unsigned order) {
  if (v.total_degree() > order)
    throw std::out_of_range("euler_polynomial: |v| beyond truncation");
  TupleUmbra<OrderPoly> half =
      scale(dot_product_gf(euler_minus_unity_tuple(v.dimension(), order)), make_rat(1, 2));
  return moment_polynomial(half, v);
}

MvPoly<OrderPoly> euler_polynomial(const MultiIndex& v) {
  return euler_polynomial(v, v.total_degree());
}

Rat evaluate(const MvPoly<OrderPoly>& P, std::span<const Rat> point, const Rat& t0) {
  if (point.size() != P.dimension())
    throw std::invalid_argument("evaluate: point dimension mismatch");
  Rat total(0);
  for (const auto& [w, c] : P.terms()) {
    Rat term = c.eval(t0);
    for (unsigned i = 0; i < P.dimension(); ++i) term *= pow_rat(point[i], w[i]);
    total += term;
  }
  return total;
}

MvPoly<OrderPoly> affine_substitute(const MvPoly<OrderPoly>& P, const Rat& a,
                                    const OrderPoly& b) {
  const unsigned d = P.dimension();
  MvPoly<OrderPoly> out(d);
  for (const auto& [w, c] : P.terms()) {
    MvPoly<OrderPoly> term = MvPoly<OrderPoly>::constant(d, c);
    for (unsigned i = 0; i < d; ++i) {
      if (w[i] == 0) continue;
      // (a x_i + b)^e = sum_j C(e,j) a^j b^{e-j} x_i^j
      MvPoly<OrderPoly> factor(d);
      for (unsigned j = 0; j <= w[i]; ++j) {
        OrderPoly coef =
            OrderPoly(Rat(binomial_int(w[i], j)) * pow_rat(a, j)) * pow_poly(b, w[i] - j);
        std::vector<unsigned> e(d, 0);
        e[i] = j;
        factor.add_term(MultiIndex(std::move(e)), std::move(coef));
      }
      term *= factor;
    }
    out += term;
  }
  return out;
}

OrderPoly umbral_substitute(const MvPoly<OrderPoly>& P, const TupleUmbra<OrderPoly>& T) {
  if (P.dimension() != T.dim)
    throw std::invalid_argument("umbral_substitute: dimension mismatch");
  OrderPoly total;
  for (const auto& [w, c] : P.terms()) total += c * mv_moment(T, w);
  return total;
}

MvPoly<OrderPoly> umbral_shift(const MvPoly<OrderPoly>& P, const TupleUmbra<OrderPoly>& T) {
  if (P.dimension() != T.dim)
    throw std::invalid_argument("umbral_shift: dimension mismatch");
  MvPoly<OrderPoly> out(P.dimension());
  for (const auto& [w, c] : P.terms())
    for (const MultiIndex& j : sub_indices(w))
      out.add_term(w.minus(j), c * OrderPoly(Rat(binomial(w, j))) * mv_moment(T, j));
  return out;
}

CheckResult addition_theorem_check(const MultiIndex& v) {
  const unsigned n = v.total_degree();
  return addition_theorem_check(v, bernoulli_egf(n), euler_egf(n));
}

CheckResult addition_theorem_check(const MultiIndex& v, const Egf<Rat>& bernoulli_base,
                                   const Egf<Rat>& euler_base) {
  CheckResult out;
  const unsigned d = v.dimension();
  const unsigned n = v.total_degree();
  const BiOrderPoly order_sum = bi_t() + bi_s();

  const Egf<Rat> em_u =
      mul(truncated(euler_base, n), exp_egf(n, Rat(-1)));
  struct Family {
    const char* name;
    TupleUmbra<OrderPoly> dotted;
  };
  const Family families[] = {
      {"bernoulli", dot_product_gf(make_tuple_umbra(
                        make_umbra(truncated(bernoulli_base, n), "bernoulli"), d))},
      {"euler", scale(dot_product_gf(make_tuple_umbra(
                          make_umbra(em_u, "euler-minus-unity"), d)),
                      make_rat(1, 2))},
  };

  for (const Family& fam : families) {
    std::map<MultiIndex, MvPoly<OrderPoly>> polys;
    for (const MultiIndex& k : sub_indices(v))
      polys.emplace(k, moment_polynomial(fam.dotted, k));

    // order t+s, argument x+y
    MvPoly<BiOrderPoly> lhs(2 * d);
    for (const MultiIndex& k : sub_indices(v)) {
      BiOrderPoly coef = mv_moment(fam.dotted, k).eval(order_sum);
      lhs += xy_power(v.minus(k))
                 .scaled(BiOrderPoly(Rat(binomial(v, k))))
                 .scaled(coef);
    }

    MvPoly<BiOrderPoly> rhs(2 * d);
    for (const MultiIndex& k : sub_indices(v)) {
      MvPoly<BiOrderPoly> prod =
          lift_xy(polys.at(k), false) * lift_xy(polys.at(v.minus(k)), true);
      rhs += prod.scaled(BiOrderPoly(Rat(binomial(v, k))));
    }
    bool good = lhs == rhs;
    out.record(good, good ? std::string()
                          : std::string(fam.name) + " addition at v=" + v.to_string() +
                                ": lhs=" + to_string(lhs) + " rhs=" + to_string(rhs));

    // s = -t collapse: sum C(v,k) P_k^{(t)}(x) P_{v-k}^{(-t)}(x) = 2^{|v|} x^v
    MvPoly<OrderPoly> collapsed(d);
    for (const MultiIndex& k : sub_indices(v)) {
      MvPoly<OrderPoly> prod = polys.at(k) * substitute_negated_order(polys.at(v.minus(k)));
      collapsed += prod.scaled(OrderPoly(Rat(binomial(v, k))));
    }
    MvPoly<OrderPoly> expected =
        MvPoly<OrderPoly>::monomial(v, OrderPoly(pow_rat(Rat(2), n)));
    good = collapsed == expected;
    out.record(good, good ? std::string()
                          : std::string(fam.name) + " inverse-order collapse at v=" +
                                v.to_string() + ": got " + to_string(collapsed));
  }
  return out;
}

CheckResult poly_gf_check(unsigned max_n) {
  return poly_gf_check(max_n, bernoulli_egf(max_n), euler_egf(max_n));
}

CheckResult poly_gf_check(unsigned max_n, const Egf<Rat>& bernoulli_base,
                          const Egf<Rat>& euler_base) {
  using XPoly = DensePoly<OrderPoly>;  // variable x over Q[t]
  CheckResult out;
  const unsigned N = max_n;

  Egf<XPoly> exz(N);
  {
    XPoly p(1);
    const XPoly x = XPoly::variable();
    for (unsigned m = 0; m <= N; ++m) {
      exz[m] = p;
      p = p * x;
    }
  }
  const auto lift = [](const Egf<OrderPoly>& f) {
    Egf<XPoly> g(f.order());
    for (unsigned m = 0; m <= f.order(); ++m) g[m] = XPoly(f[m]);
    return g;
  };
  const auto family_poly_as_xpoly = [](const MvPoly<OrderPoly>& P) {
    XPoly r;
    for (const auto& [w, c] : P.terms()) {
      std::vector<OrderPoly> mono(w[0] + 1, OrderPoly(0));
      mono[w[0]] = c;
      r += XPoly(std::move(mono));
    }
    return r;
  };

  struct Side {
    const char* name;
    Egf<Rat> base;  // the series whose t-th power generates the family
  };
  const Side sides[] = {
      {"bernoulli", truncated(bernoulli_base, N)},
      {"euler", scale_arg(mul(truncated(euler_base, N), exp_egf(N, Rat(-1))),
                          make_rat(1, 2))},
  };

  for (const Side& side : sides) {
    TupleUmbra<OrderPoly> dotted = dot_product_gf(
        make_tuple_umbra(make_umbra(side.base, side.name), 1));
    Egf<XPoly> prod = mul(exz, lift(dotted.base.moments));
    for (unsigned m = 0; m <= N; ++m) {
      XPoly expect = prod[m];
      XPoly actual = family_poly_as_xpoly(moment_polynomial(dotted, MultiIndex{{m}}));
      out.record(expect == actual, std::string(side.name) + " g.f. coefficient n=" +
                                       std::to_string(m) + " disagrees with the moment"
                                       " expansion");
      // t = 0 collapses the g.f. to e^{xz}, the polynomial to x^n
      std::vector<Rat> at0(expect.size(), Rat(0));
      for (std::size_t i = 0; i < expect.size(); ++i) at0[i] = expect.coeff(i).eval(Rat(0));
      DensePoly<Rat> collapsed(std::move(at0));
      std::vector<Rat> mono(m + 1, Rat(0));
      mono[m] = Rat(1);
      out.record(collapsed == DensePoly<Rat>(std::move(mono)),
                 std::string(side.name) + " g.f. at t=0 is not x^" + std::to_string(m));
    }
  }
  return out;
}

CheckResult lemma_c_check(unsigned max_n) {
  return lemma_c_check(max_n, bernoulli_egf(max_n), euler_egf(max_n));
}

CheckResult lemma_c_check(unsigned max_n, const Egf<Rat>& bernoulli_base,
                          const Egf<Rat>& euler_base) {
  CheckResult out;
  const unsigned N = max_n;
  const Egf<Rat> bern = truncated(bernoulli_base, N);
  const Egf<Rat> lhs = scale_arg(bern, Rat(2));
  const Egf<Rat> em_u = mul(truncated(euler_base, N), exp_egf(N, Rat(-1)));
  const Egf<Rat> rhs = mul(scale_arg(em_u, make_rat(1, 2)), bern);
  for (unsigned n = 0; n <= N; ++n)
    out.record(lhs[n] == rhs[n], "doubling link fails at n=" + std::to_string(n) +
                                     ": " + rat_to_string(lhs[n]) + " vs " +
                                     rat_to_string(rhs[n]));
  return out;
}

namespace {

std::string monomial_to_string(const MultiIndex& w) {
  std::string s;
  for (unsigned i = 0; i < w.dimension(); ++i) {
    if (w[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (w[i] > 1) s += "^" + std::to_string(w[i]);
  }
  return s;
}

template <class R>
std::string mv_to_string(const MvPoly<R>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    std::string mono = monomial_to_string(w);
    s += "(" + to_string(c, var) + ")";
    if (!mono.empty()) s += "*" + mono;
  }
  return s;
}

}  // namespace

std::string to_string(const MvPoly<OrderPoly>& p) { return mv_to_string(p, "t"); }
std::string to_string(const MvPoly<BiOrderPoly>& p) { return mv_to_string(p, "s"); }

}  // namespace umbral
