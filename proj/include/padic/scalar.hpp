#pragma once

#include <string>
#include <string_view>

#include "padic/numbers.hpp"

namespace padic {

// An exact element of Q_p, stored as (num/den) * p^v with p coprime to both
// num and den, gcd(num, den) = 1 and den > 0.  Elements with den = 1 form the
// dense subring Z[1/p]; a denominator != 1 is a deferred division (the
// quotient of two ring elements), resolved by modular inversion when the
// value is reduced to a finite precision.
//
// Zero is canonically (0/1) * p^0.  The prime is carried by the value and
// mixing primes in arithmetic is an error.
class PadicScalar {
 public:
  PadicScalar(long prime, long value) : PadicScalar(prime, BigInt(value)) {}
  PadicScalar(long prime, BigInt value);

  static PadicScalar zero(long prime) { return PadicScalar(prime, 0); }
  static PadicScalar one(long prime) { return PadicScalar(prime, 1); }

  // m * p^v (m need not be a unit; the representation is recanonicalized).
  static PadicScalar from_mantissa_exp(long prime, BigInt mantissa, long exp);

  // a / b, exact.  Throws DivisionByZero if b = 0.
  static PadicScalar from_ratio(long prime, BigInt a, BigInt b);

  static PadicScalar from_rational(long prime, const BigRat& q);

  long prime() const { return prime_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1 && val_ == 0; }
  bool is_unit() const { return num_ != 0 && val_ == 0; }

  // val(0) = kInfiniteVal.
  long val() const { return is_zero() ? kInfiniteVal : val_; }

  // Unit part num/den; exponent val_.  Meaningful for nonzero values.
  const BigInt& unit_num() const { return num_; }
  const BigInt& unit_den() const { return den_; }
  bool has_unit_denominator() const { return den_ == 1; }

  BigRat to_rational() const;

  PadicScalar operator-() const;
  PadicScalar operator+(const PadicScalar& o) const;
  PadicScalar operator-(const PadicScalar& o) const;
  PadicScalar operator*(const PadicScalar& o) const;
  PadicScalar operator/(const PadicScalar& o) const;  // DivisionByZero
  PadicScalar& operator+=(const PadicScalar& o) { return *this = *this + o; }
  PadicScalar& operator-=(const PadicScalar& o) { return *this = *this - o; }
  PadicScalar& operator*=(const PadicScalar& o) { return *this = *this * o; }
  PadicScalar& operator/=(const PadicScalar& o) { return *this = *this / o; }

  PadicScalar inverse() const;        // DivisionByZero on 0
  PadicScalar pow(long n) const;      // n < 0 needs a nonzero base
  PadicScalar mul_p_power(long k) const;  // x * p^k

  bool operator==(const PadicScalar& o) const;
  bool operator!=(const PadicScalar& o) const { return !(*this == o); }

  // Canonical text form "m*p^v" (or "a/b*p^v" for deferred quotients),
  // e.g. "3*5^2", "-1*2^-4", "1/2*5^0".  Round-trips exactly.
  std::string to_string() const;
  static PadicScalar parse(long prime, std::string_view text);

 private:
  PadicScalar(long prime, BigInt num, BigInt den, long val, bool canonical);
  void canonicalize();

  long prime_;
  BigInt num_;
  BigInt den_;
  long val_;
};

inline PadicScalar operator*(long a, const PadicScalar& x) {
  return PadicScalar(x.prime(), a) * x;
}

}  // namespace padic
