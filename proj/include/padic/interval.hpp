#pragma once

#include <string>
#include <string_view>

#include "padic/scalar.hpp"

namespace padic {

// Absolute precision, an integer extended by two sentinels: kExactPrec for
// exact values (O(p^inf), i.e. no uncertainty) and kNoInfoPrec for complete
// absence of information (O(p^-inf), the whole field).
inline constexpr long kExactPrec = std::numeric_limits<long>::max();
inline constexpr long kNoInfoPrec = std::numeric_limits<long>::min();

// The ball x + O(p^n): the classical representation of an approximate p-adic
// number, one residue plus one absolute precision.  The center is kept as a
// canonical representative: unit mantissa in [1, p^(n - val)), den = 1, so
// two intervals are equal iff their fields are equal.
class PadicInterval {
 public:
  // Reduces the (exact) center modulo p^absprec.  Resolves deferred
  // quotients by modular inversion of the denominator.
  PadicInterval(const PadicScalar& center, long absprec);

  static PadicInterval exact(const PadicScalar& x) {
    return PadicInterval(x, kExactPrec);
  }
  static PadicInterval zero_ball(long prime, long absprec) {
    return PadicInterval(PadicScalar::zero(prime), absprec);
  }

  long prime() const { return center_.prime(); }
  long absprec() const { return absprec_; }
  bool is_exact() const { return absprec_ == kExactPrec; }

  // True when no representative of the ball is distinguishable from 0,
  // i.e. the center is 0 (the ball is O(p^n) itself).
  bool is_zeroish() const { return center_.is_zero() && !is_exact(); }

  const PadicScalar& center() const { return center_; }

  // val of the ball: exact valuation of the center when that is nonzero;
  // for a zero-centered ball only the lower bound absprec is known and
  // known_val() reports failure.
  bool val_known() const { return !center_.is_zero() || is_exact(); }
  long val_lower_bound() const {
    return center_.is_zero() ? (is_exact() ? kInfiniteVal : absprec_)
                             : center_.val();
  }

  // Number of significant digits, absprec - val.
  long rel_prec() const;

  PadicInterval operator+(const PadicInterval& o) const;
  PadicInterval operator-(const PadicInterval& o) const;
  PadicInterval operator*(const PadicInterval& o) const;
  // Throws IndeterminateDivision when the divisor cannot be told apart
  // from zero at its precision.
  PadicInterval operator/(const PadicInterval& o) const;
  PadicInterval operator-() const;

  // Same ball with lower precision n <= absprec (NegativePrecision else).
  PadicInterval reduce_to(long n) const;

  bool operator==(const PadicInterval& o) const;
  bool operator!=(const PadicInterval& o) const { return !(*this == o); }

  // "m*p^v + O(p^n)"; exact values print as "m*p^v + O(p^inf)".
  std::string to_string() const;
  static PadicInterval parse(long prime, std::string_view text);

 private:
  PadicScalar center_;
  long absprec_;
};

// x + O(p^n) for an exact scalar x, the projection of Q_p onto its finite
// quotients.  Deferred quotients are resolved here.
PadicInterval reduce(const PadicScalar& x, long n);

}  // namespace padic
