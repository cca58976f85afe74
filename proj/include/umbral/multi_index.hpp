#ifndef UMBRAL_MULTI_INDEX_HPP
#define UMBRAL_MULTI_INDEX_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

// Exponent tuple v in N_0^d. Immutable after construction; ordering is
// lexicographic so multi-indices can key ordered containers directly.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<unsigned> parts);
  MultiIndex(std::initializer_list<unsigned> parts)
      : MultiIndex(std::vector<unsigned>(parts)) {}

  static MultiIndex zero(unsigned dim);

  unsigned dimension() const { return static_cast<unsigned>(parts_.size()); }
  unsigned operator[](unsigned i) const { return parts_[i]; }
  const std::vector<unsigned>& parts() const { return parts_; }

  // |v| = v_1 + ... + v_d
  unsigned total_degree() const;
  // v! = v_1! ... v_d!
  Int factorial() const;

  bool is_zero() const { return total_degree() == 0; }

  // componentwise k_j <= v_j for all j; distinct from the lexicographic order
  bool covers(const MultiIndex& k) const;

  MultiIndex plus(const MultiIndex& o) const;
  // requires covers(o)
  MultiIndex minus(const MultiIndex& o) const;

  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;

  // "(2,1,0)"
  std::string to_string() const;

 private:
  std::vector<unsigned> parts_;
};

// Product of componentwise binomial coefficients; 0 when any k_j > v_j.
Int binomial(const MultiIndex& v, const MultiIndex& k);

// All k with 0 <= k <= v (componentwise), in lexicographic order.
// Exactly prod_j (v_j + 1) entries.
std::vector<MultiIndex> sub_indices(const MultiIndex& v);

// All v in N_0^dim with |v| <= max_degree, in lexicographic order.
std::vector<MultiIndex> indices_up_to_degree(unsigned dim, unsigned max_degree);

// t(t-1)...(t-k+1); 1 when k = 0. Works over any commutative ring with
// subtraction and construction from long (rationals, polynomials, ...).
template <class R>
R falling_factorial(const R& t, unsigned k) {
  R acc(1);
  for (unsigned i = 0; i < k; ++i) acc = acc * (t - R(static_cast<long>(i)));
  return acc;
}

}  // namespace umbral

#endif
