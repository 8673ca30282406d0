#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "verlinde/rational.hpp"

namespace verlinde {

long euler_phi(long m);

// Coefficients of the m-th cyclotomic polynomial, constant term first.
// Computed once per m by the divisor recurrence and cached.
const std::vector<Int>& cyclotomic_polynomial(long m);

// An exact element of Q(zeta_M) in the power basis 1, zeta, ..., zeta^{phi(M)-1},
// reduced modulo the M-th cyclotomic polynomial. Immutable value type; all
// operations are pure, so instances can be shared freely across threads.
//
// Elements of different orders compare and combine through the embedding into
// Q(zeta_lcm); within one order the power-basis representation is unique.
class Cyclo {
 public:
  Cyclo() : order_(1), c_(1, Rat(0)) {}
  explicit Cyclo(const Rat& value) : order_(1), c_(1, value) {}
  explicit Cyclo(long value) : order_(1), c_(1, Rat(value)) {}

  static Cyclo zero() { return Cyclo(); }
  static Cyclo one() { return Cyclo(1); }

  // e^(2*pi*i*turns); the field order is the reduced denominator of turns.
  static Cyclo root_of_unity(const Rat& turns);

  // Sum of coeff * e^(2*pi*i*turns) assembled directly in Q(zeta_lcm). This is
  // the workhorse for Weyl alternating sums: integer accumulation first, one
  // polynomial reduction at the end.
  static Cyclo root_of_unity_sum(const std::vector<std::pair<Rat, long>>& terms);

  long order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Value as a rational; throws std::logic_error unless is_rational().
  Rat rational_value() const;
  bool is_nonnegative_integer() const;

  // Field automorphism zeta_M -> zeta_M^t; requires gcd(t, M) = 1.
  Cyclo galois(long t) const;
  Cyclo conjugate() const { return galois(-1); }
  // Multiplicative inverse via extended Euclid against Phi_M; throws
  // std::domain_error on zero.
  Cyclo inverse() const;

  // Numerical embedding through the principal primitive root (diagnostics only).
  std::complex<double> to_complex() const;

  // Embed into Q(zeta_target); target must be a multiple of order().
  Cyclo lifted(long target) const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& rhs);
  Cyclo& operator-=(const Cyclo& rhs);
  Cyclo& operator*=(const Cyclo& rhs);
  Cyclo& operator/=(const Cyclo& rhs);

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }

  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  std::string str() const;

 private:
  static Cyclo from_poly(std::vector<Rat> poly, long m);

  long order_;
  std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclo& x);

}  // namespace verlinde
