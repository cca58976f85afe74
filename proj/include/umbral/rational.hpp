#ifndef UMBRAL_RATIONAL_HPP
#define UMBRAL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace umbral {

// Exact rational scalar. mpq_class arithmetic keeps values canonical as long
// as inputs are canonical, so every entry point that builds a rational from
// raw numerator/denominator must canonicalize.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

// Canonical text form: "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else.
inline Rat rat_from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("rat_from_string: empty input");
  Rat q;
  if (q.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("rat_from_string: bad rational '" + std::string(text) + "'");
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("rat_from_string: zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline Int factorial_int(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial_int(unsigned n, unsigned k) {
  if (k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Rat pow_rat(const Rat& base, unsigned e) {
  Rat r(1);
  Rat b = base;
  unsigned n = e;
  while (n > 0) {
    if (n & 1u) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

}  // namespace umbral

#endif
