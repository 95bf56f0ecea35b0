#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <limits>
#include <stdexcept>

namespace padic {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrimeMismatch : Error {
  PrimeMismatch() : Error("values belong to different p-adic contexts") {}
};
struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};
struct NegativePrecision : Error {
  NegativePrecision() : Error("requested precision is not available") {}
};
struct IndeterminateDivision : Error {
  IndeterminateDivision()
      : Error("divisor is indistinguishable from zero at its precision") {}
};

// Sentinel for val(0) = +infinity.
inline constexpr long kInfiniteVal = std::numeric_limits<long>::max();

// Largest e >= 0 with p^e | n.  Pre: n != 0.
long p_valuation(const BigInt& n, long p);

// Strips all factors of p out of n (in place) and returns their count.
long strip_p(BigInt& n, long p);

// p^e for e >= 0.
BigInt p_power(long p, long e);

// Representative of a mod m in [0, m).  Pre: m > 0.
BigInt mod_nonneg(const BigInt& a, const BigInt& m);

// Inverse of a modulo m.  Pre: gcd(a, m) = 1, m > 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

inline long merge_prime(long pa, long pb) {
  if (pa != pb) throw PrimeMismatch();
  return pa;
}

}  // namespace padic
