#include "padic/numbers.hpp"

namespace padic {

long p_valuation(const BigInt& n, long p) {
  if (n == 0) throw Error("valuation of zero requested");
  BigInt m = n;
  return strip_p(m, p);
}

long strip_p(BigInt& n, long p) {
  if (n == 0) return 0;
  long v = 0;
  // Pull out large chunks first; helps when the valuation is big.
  const BigInt pp = BigInt(p) * p * p * p;
  BigInt q, r;
  for (;;) {
    divide_qr(n, pp, q, r);
    if (r != 0) break;
    n = q;
    v += 4;
  }
  const BigInt bp(p);
  for (;;) {
    divide_qr(n, bp, q, r);
    if (r != 0) break;
    n = q;
    v += 1;
  }
  return v;
}

BigInt p_power(long p, long e) {
  if (e < 0) throw Error("negative exponent in p_power");
  return pow(BigInt(p), static_cast<unsigned>(e));
}

BigInt mod_nonneg(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  // Extended Euclid.
  BigInt r0 = mod_nonneg(a, m), r1 = m;
  BigInt s0 = 1, s1 = 0;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw Error("mod_inverse: arguments are not coprime");
  return mod_nonneg(s0, m);
}

}  // namespace padic
