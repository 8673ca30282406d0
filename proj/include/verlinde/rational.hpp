#pragma once

#include <gmpxx.h>

#include <string>

namespace verlinde {

using Rat = mpq_class;
using Int = mpz_class;

// a/b in lowest terms; b != 0.
inline Rat frac(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Fractional part in [0, 1).
inline Rat mod1(const Rat& q) { return q - Rat(rat_floor(q)); }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

// "num/den" (or "num" when integral), the exact-witness format used in reports.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace verlinde
