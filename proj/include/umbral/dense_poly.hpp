#ifndef UMBRAL_DENSE_POLY_HPP
#define UMBRAL_DENSE_POLY_HPP

#include <concepts>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

// Dense univariate polynomial over a commutative ring R, coefficients stored
// lowest degree first with no trailing zeros (the zero polynomial is empty).
// Nesting gives the multi-parameter rings: DensePoly<Rat> is Q[t] and
// DensePoly<DensePoly<Rat>> is Q[s][t].
template <class R>
class DensePoly {
 public:
  DensePoly() = default;

  // Constant polynomial; accepts anything the coefficient ring accepts, so
  // scalars embed through arbitrarily deep nestings.
  template <class T>
    requires std::constructible_from<R, T&&> &&
             (!std::same_as<std::remove_cvref_t<T>, DensePoly>) &&
             (!std::same_as<std::remove_cvref_t<T>, std::vector<R>>)
  DensePoly(T&& constant) {
    R c(std::forward<T>(constant));
    if (!is_zero(c)) coeffs_.push_back(std::move(c));
  }

  explicit DensePoly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static DensePoly variable() {
    DensePoly p;
    p.coeffs_ = {R(0), R(1)};
    return p;
  }

  bool empty() const { return coeffs_.empty(); }
  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  // Coefficient of the i-th power; zero beyond the stored degree.
  R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R(0); }
  const std::vector<R>& coeffs() const { return coeffs_; }

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<R> c(std::max(a.coeffs_.size(), b.coeffs_.size()), R(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
    return DensePoly(std::move(c));
  }

  friend DensePoly operator-(const DensePoly& a) {
    std::vector<R> c(a.coeffs_);
    for (auto& x : c) x = R(0) - x;
    return DensePoly(std::move(c));
  }

  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
    return a + (-b);
  }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.empty() || b.empty()) return DensePoly();
    std::vector<R> c(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return DensePoly(std::move(c));
  }

  DensePoly& operator+=(const DensePoly& o) { return *this = *this + o; }
  DensePoly& operator-=(const DensePoly& o) { return *this = *this - o; }
  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

  // Horner evaluation in any ring S the coefficients embed into.
  template <class S>
  S eval(const S& x) const {
    S acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + S(coeffs_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const DensePoly<R>& p) {
  return p.empty();
}

// Q[t]: exact polynomials in the order parameter.
using OrderPoly = DensePoly<Rat>;
// Q[s][t]: outer variable s, inner variable t.
using BiOrderPoly = DensePoly<OrderPoly>;

inline OrderPoly order_variable() { return OrderPoly::variable(); }

// t viewed inside Q[s][t]
inline BiOrderPoly bi_t() { return BiOrderPoly(order_variable()); }
// s viewed inside Q[s][t]
inline BiOrderPoly bi_s() { return BiOrderPoly::variable(); }

// q(t) with t replaced by -t (negates odd coefficients)
inline OrderPoly negate_order(const OrderPoly& q) {
  std::vector<Rat> c(q.coeffs());
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return OrderPoly(std::move(c));
}

// q(t) re-read as the same polynomial in s, i.e. constant in t.
inline BiOrderPoly rename_order_to_s(const OrderPoly& q) {
  std::vector<OrderPoly> c;
  c.reserve(q.size());
  for (const Rat& r : q.coeffs()) c.push_back(OrderPoly(r));
  return BiOrderPoly(std::move(c));
}

std::string to_string(const OrderPoly& p, const std::string& var = "t");
std::string to_string(const BiOrderPoly& p, const std::string& var = "s");

}  // namespace umbral

#endif
