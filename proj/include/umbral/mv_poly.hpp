#ifndef UMBRAL_MV_POLY_HPP
#define UMBRAL_MV_POLY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "umbral/dense_poly.hpp"
#include "umbral/multi_index.hpp"
#include "umbral/umbra.hpp"

namespace umbral {

// Sparse multivariate polynomial in x_1..x_d keyed by exponent multi-index,
// coefficients in an exact ring (Q[t], or Q[s][t] for the two-parameter
// identities). Zero coefficients are never stored; term order is
// lexicographic, so iteration and rendering are deterministic.
template <class R>
class MvPoly {
 public:
  explicit MvPoly(unsigned dim) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("MvPoly: dimension must be >= 1");
  }

  static MvPoly constant(unsigned dim, R c) {
    MvPoly p(dim);
    p.add_term(MultiIndex::zero(dim), std::move(c));
    return p;
  }

  static MvPoly monomial(MultiIndex w, R c) {
    MvPoly p(w.dimension());
    p.add_term(std::move(w), std::move(c));
    return p;
  }

  unsigned dimension() const { return dim_; }
  const std::map<MultiIndex, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.total_degree());
    return d;
  }

  R coeff(const MultiIndex& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? R(0) : it->second;
  }

  void add_term(const MultiIndex& w, R c) {
    if (w.dimension() != dim_)
      throw std::invalid_argument("MvPoly::add_term: dimension mismatch");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      if (!umbral::is_zero(c)) terms_.emplace(w, std::move(c));
    } else {
      it->second = it->second + c;
      if (umbral::is_zero(it->second)) terms_.erase(it);
    }
  }

  friend bool operator==(const MvPoly&, const MvPoly&) = default;

  friend MvPoly operator+(const MvPoly& a, const MvPoly& b) {
    MvPoly r(a.require_same_dim(b));
    r.terms_ = a.terms_;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
  }

  friend MvPoly operator-(const MvPoly& a, const MvPoly& b) {
    MvPoly r(a.require_same_dim(b));
    r.terms_ = a.terms_;
    for (const auto& [w, c] : b.terms_) r.add_term(w, R(0) - c);
    return r;
  }

  friend MvPoly operator*(const MvPoly& a, const MvPoly& b) {
    MvPoly r(a.require_same_dim(b));
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add_term(wa.plus(wb), ca * cb);
    return r;
  }

  MvPoly& operator+=(const MvPoly& o) { return *this = *this + o; }
  MvPoly& operator-=(const MvPoly& o) { return *this = *this - o; }
  MvPoly& operator*=(const MvPoly& o) { return *this = *this * o; }

  MvPoly scaled(const R& c) const {
    MvPoly r(dim_);
    for (const auto& [w, coef] : terms_) r.add_term(w, coef * c);
    return r;
  }

 private:
  unsigned require_same_dim(const MvPoly& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("MvPoly: dimension mismatch");
    return dim_;
  }

  unsigned dim_;
  std::map<MultiIndex, R> terms_;
};

// Appell-style moment expansion: sum over k <= v of C(v,k) x^{v-k} E[T^k].
// The x^v coefficient is E[T^0] = 1, so the leading monomial is monic.
MvPoly<OrderPoly> moment_polynomial(const TupleUmbra<OrderPoly>& T, const MultiIndex& v);

// Multivariate Bernoulli polynomial of order v with symbolic order parameter;
// the truncation must cover |v|.
MvPoly<OrderPoly> bernoulli_polynomial(const MultiIndex& v, unsigned order);
MvPoly<OrderPoly> bernoulli_polynomial(const MultiIndex& v);

// Multivariate Euler polynomial of order v (Norlund normalization: the
// random part is half the dotted Euler-minus-unity tuple).
MvPoly<OrderPoly> euler_polynomial(const MultiIndex& v, unsigned order);
MvPoly<OrderPoly> euler_polynomial(const MultiIndex& v);

// Exact substitution x = point, t = t0.
Rat evaluate(const MvPoly<OrderPoly>& P, std::span<const Rat> point, const Rat& t0);

// x_i -> a*x_i + b for every coordinate, exact in Q[t].
MvPoly<OrderPoly> affine_substitute(const MvPoly<OrderPoly>& P, const Rat& a,
                                    const OrderPoly& b);

// E[P(T)]: each monomial x^w maps to mv_moment(T, w). Independent-copy
// semantics: T is uncorrelated with every umbra already folded into the
// coefficients, so coefficient and moment simply multiply in Q[t].
OrderPoly umbral_substitute(const MvPoly<OrderPoly>& P, const TupleUmbra<OrderPoly>& T);

// E[P(x + T)] with x kept symbolic; umbral_substitute is this at x = 0.
MvPoly<OrderPoly> umbral_shift(const MvPoly<OrderPoly>& P, const TupleUmbra<OrderPoly>& T);

// Outcome of one machine-checked identity family.
struct CheckResult {
  std::uint64_t attempted = 0;
  std::uint64_t passed = 0;
  std::string first_failure;  // empty iff passed == attempted

  bool ok() const { return passed == attempted; }

  void record(bool good, const std::string& detail) {
    ++attempted;
    if (good)
      ++passed;
    else if (first_failure.empty())
      first_failure = detail;
  }
};

// Addition theorems in Q[s][t][x,y] (2d indeterminates) for both families,
// plus the s = -t collapse sum C(v,k) P_k^{(t)}(x) P_{v-k}^{(-t)}(x) = 2^{|v|} x^v.
// The explicit-base variants exist so the battery can run on perturbed
// moment sequences; the plain ones use the exact builtin series.
CheckResult addition_theorem_check(const MultiIndex& v);
CheckResult addition_theorem_check(const MultiIndex& v, const Egf<Rat>& bernoulli_base,
                                   const Egf<Rat>& euler_base);

// Coefficients of e^{x z} f(z)^t match the polynomial families term by term
// at d = 1 up to order max_n, for f the Bernoulli and half-Euler-minus-unity
// series; includes the t = 0 collapse to x^n.
CheckResult poly_gf_check(unsigned max_n);
CheckResult poly_gf_check(unsigned max_n, const Egf<Rat>& bernoulli_base,
                          const Egf<Rat>& euler_base);

// Series form of the Bernoulli/Euler link: moments of the argument-doubled
// Bernoulli base equal the convolution of the halved Euler-minus-unity
// moments with the Bernoulli moments, for n <= max_n.
CheckResult lemma_c_check(unsigned max_n);
CheckResult lemma_c_check(unsigned max_n, const Egf<Rat>& bernoulli_base,
                          const Egf<Rat>& euler_base);

std::string to_string(const MvPoly<OrderPoly>& p);
std::string to_string(const MvPoly<BiOrderPoly>& p);

}  // namespace umbral

#endif
