#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gliderrep/rational.hpp"

namespace glrep {

// Element of the cyclotomic field Q(zeta_N), stored as the unique
// representative of degree < phi(N) modulo the N-th cyclotomic polynomial.
// Equality of values is equality of (conductor-coerced) coefficient vectors.
class CycNumber {
public:
  CycNumber() : conductor_(1), coeffs_(1, Rat(0)) {}
  explicit CycNumber(const Rat& r, long conductor = 1);
  explicit CycNumber(long n, long conductor = 1) : CycNumber(Rat(n), conductor) {}

  static CycNumber zero(long conductor) { return CycNumber(Rat(0), conductor); }
  static CycNumber one(long conductor) { return CycNumber(Rat(1), conductor); }
  // zeta(N, k) = exp(2*pi*i*k/N) as z^k mod Phi_N.
  static CycNumber zeta(long conductor, long k = 1);

  long conductor() const { return conductor_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_part() const;  // Domain error unless is_rational()

  // Embed into Q(zeta_target); target must be a multiple of the conductor.
  CycNumber to_conductor(long target) const;
  // Smallest conductor representation of the same value.
  CycNumber reduced() const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator/=(const CycNumber& o);  // Domain error on zero divisor

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }

  CycNumber inverse() const;
  // Complex conjugation, the Galois map z -> z^(N-1).
  CycNumber conj() const;
  // Galois action z -> z^a for gcd(a, N) = 1.
  CycNumber galois(long a) const;

  bool operator==(const CycNumber& o) const { return cmp(o) == 0; }
  bool operator!=(const CycNumber& o) const { return cmp(o) != 0; }
  // Total order on values (conductor-insensitive); used for canonical sorting.
  int cmp(const CycNumber& o) const;

  // Multiplicative order if the value is a root of unity, otherwise 0.
  long root_of_unity_order() const;

  // Canonical textual form, e.g. "1/2*z^3 - z (N=8)". parse() inverts str().
  std::string str() const;
  static CycNumber parse(const std::string& text);

private:
  long conductor_;
  std::vector<Rat> coeffs_;  // size phi(conductor_)

  void reduce_mod_cyclotomic(std::vector<Rat>& poly) const;
};

long euler_phi(long n);
// Phi_n as dense integer coefficients, ascending degree.
const std::vector<Rat>& cyclotomic_poly(long n);

}  // namespace glrep
