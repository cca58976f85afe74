#include "umbral/dense_poly.hpp"

namespace umbral {

std::string to_string(const OrderPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rat& c = p.coeff(i);
    if (is_zero(c)) continue;
    if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += "-";
    Rat a = abs(c);
    if (i == 0 || a != 1) s += a.get_str();
    if (i > 0) {
      if (a != 1) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

std::string to_string(const BiOrderPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const OrderPoly& c = p.coeff(i);
    if (is_zero(c)) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c, "t") + ")";
    if (i > 0) {
      s += "*" + var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace umbral
