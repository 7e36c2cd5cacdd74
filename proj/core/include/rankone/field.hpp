#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A Cyclotomic is stored as a polynomial in zeta_N reduced mod the N-th
// cyclotomic polynomial, so the coefficient vector always has length
// phi(N).  Coefficients are arbitrary-precision rationals; nothing here
// ever rounds.  Elements of different orders may be combined freely:
// arithmetic promotes both sides into Q(zeta_lcm) first.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace rankone {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Safe construction: normalizes sign, reduces, rejects den == 0.
Rational make_rational(Int num, Int den);

std::string rational_str(const Rational& r);

unsigned long euler_phi(unsigned long n);
unsigned long gcd_ul(unsigned long a, unsigned long b);
unsigned long lcm_ul(unsigned long a, unsigned long b);

// Monic integer coefficients of Phi_N, ascending degree.  Cached.
const std::vector<Int>& cyclotomic_polynomial(unsigned long n);

class Cyclotomic {
 public:
  Cyclotomic();  // zero in Q
  explicit Cyclotomic(const Rational& r);
  explicit Cyclotomic(long v);

  // coeffs.size() must equal phi(order).
  Cyclotomic(unsigned long order, std::vector<Rational> coeffs);

  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return Cyclotomic(Rational(1)); }

  // zeta_n^k for any integer k (reduced mod n).
  static Cyclotomic root_of_unity(unsigned long n, long k);

  unsigned long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws std::domain_error if not rational

  // Embed into Q(zeta_n); requires order() | n.
  Cyclotomic promoted(unsigned long n) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);

  Cyclotomic inverse() const;  // throws std::domain_error on zero
  Cyclotomic pow(long e) const;

  // Smallest d with this^d == 1; throws std::domain_error if no such d.
  unsigned long multiplicative_order() const;

  std::string str() const;

 private:
  unsigned long order_;            // the N of Q(zeta_N)
  std::vector<Rational> coeffs_;   // length phi(N), ascending powers of zeta_N
};

Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b);
Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b);
Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b);
Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
bool operator==(const Cyclotomic& a, const Cyclotomic& b);
bool operator!=(const Cyclotomic& a, const Cyclotomic& b);

// Complex conjugation, i.e. the Galois automorphism zeta_N -> zeta_N^{-1}.
Cyclotomic conj(const Cyclotomic& a);

// Deterministic ordering of two values embedded in Q(zeta_n); both orders
// must divide n.  Used for canonical sorting within a fixed ambient field
// (comparing at mixed ambient orders is not a consistent total order).
int compare_at(unsigned long n, const Cyclotomic& a, const Cyclotomic& b);

}  // namespace rankone
