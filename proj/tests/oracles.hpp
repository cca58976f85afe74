#ifndef UMBRAL_TESTS_ORACLES_HPP
#define UMBRAL_TESTS_ORACLES_HPP

// Reference number sequences for tests, generated by textbook recurrences
// that share nothing with the library's series machinery.

#include <vector>

#include "umbral/rational.hpp"

namespace umbral::test_oracles {

// sum_{k=0..n} C(n+1,k) B_k = 0
inline std::vector<Rat> bernoulli_by_recurrence(unsigned max_n) {
  std::vector<Rat> b{Rat(1)};
  for (unsigned n = 1; n <= max_n; ++n) {
    Rat acc(0);
    for (unsigned k = 0; k < n; ++k) acc += Rat(binomial_int(n + 1, k)) * b[k];
    b.push_back(-acc / Rat(static_cast<long>(n) + 1));
  }
  return b;
}

// sum over k = n, n-2, n-4, ... of C(n,k) E_k = 0 for n >= 1
inline std::vector<Rat> euler_by_recurrence(unsigned max_n) {
  std::vector<Rat> e{Rat(1)};
  for (unsigned n = 1; n <= max_n; ++n) {
    Rat acc(0);
    for (unsigned k = n % 2; k < n; k += 2) acc += Rat(binomial_int(n, k)) * e[k];
    e.push_back(-acc);
  }
  return e;
}

}  // namespace umbral::test_oracles

#endif
