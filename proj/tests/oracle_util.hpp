// Shared brute-force oracles for the test suites.  Everything here works by
// exhaustive enumeration at desk scale and is deliberately independent of the
// library's own precision bookkeeping.
#pragma once

#include <functional>
#include <vector>

#include "padic/interval.hpp"
#include "padic/scalar.hpp"

namespace padic::testing {

// All representatives of the ball, modulo p^K (K >= absprec).
inline std::vector<PadicScalar> ball_representatives(const PadicInterval& iv,
                                                     long K) {
  std::vector<PadicScalar> out;
  long n = iv.absprec();
  BigInt count = p_power(iv.prime(), K - n);
  for (BigInt t = 0; t < count; ++t) {
    PadicScalar delta =
        PadicScalar::from_mantissa_exp(iv.prime(), t, n);
    out.push_back(iv.center() + delta);
  }
  return out;
}

inline bool ball_contains(const PadicInterval& iv, const PadicScalar& z) {
  if (iv.is_exact()) return z == iv.center();
  PadicScalar d = z - iv.center();
  return d.is_zero() || d.val() >= iv.absprec();
}

// Largest n <= K such that all points agree modulo p^n: the sharpest uniform
// ball (relative to the first point) containing every point.
inline long best_uniform_prec(const std::vector<PadicScalar>& pts, long K) {
  long best = K;
  for (size_t i = 1; i < pts.size(); ++i) {
    PadicScalar d = pts[i] - pts[0];
    if (d.is_zero()) continue;
    best = std::min(best, d.val());
  }
  return best;
}

}  // namespace padic::testing
