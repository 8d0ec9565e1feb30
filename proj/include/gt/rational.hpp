#pragma once

#include <gmpxx.h>

#include <string>

namespace gt {

// Exact arithmetic everywhere: arbitrary-precision rationals and integers.
// No floating point appears anywhere in the coefficient or verification paths.
using Rat = mpq_class;
using Int = mpz_class;

// Serializes as "p/q" in lowest terms with q > 0, or plain "p" when q == 1.
inline std::string rat_str(const Rat& q) {
  Rat c(q);
  c.canonicalize();
  return c.get_str();
}

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace gt
