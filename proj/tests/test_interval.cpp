#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "oracle_util.hpp"
#include "padic/interval.hpp"

using namespace padic;
using namespace padic::testing;

namespace {

PadicInterval iv(long p, long center, long n) {
  return PadicInterval(PadicScalar(p, center), n);
}

}  // namespace

TEST_CASE("reduce examples") {
  CHECK(reduce(PadicScalar(3, 7), 2).to_string() == "7*3^0 + O(3^2)");
  // 1/2 mod 5^3: 2 * 63 = 126 = 1 mod 125
  auto half = reduce(PadicScalar::from_ratio(5, 1, 2), 3);
  CHECK(half.center() == PadicScalar(5, 63));
  CHECK((PadicScalar(5, 2) * half.center() - PadicScalar(5, 1)).val() >= 3);
  CHECK(reduce(PadicScalar(5, 5), 1).is_zeroish());
  CHECK(reduce(PadicScalar(5, 5), 1).to_string() == "0*5^0 + O(5^1)");
}

TEST_CASE("interval examples against representative enumeration") {
  // (2 + O(3^4)) * (5 + O(3^3)), oracle over all representatives mod 3^7
  auto a = iv(3, 2, 4), b = iv(3, 5, 3);
  auto prod = a * b;
  CHECK(prod == iv(3, 10, 3));
  auto reps_a = ball_representatives(a, 7);
  auto reps_b = ball_representatives(b, 7);
  std::vector<PadicScalar> prods;
  for (auto& x : reps_a)
    for (auto& y : reps_b) prods.push_back(x * y);
  CHECK(best_uniform_prec(prods, 7) == prod.absprec());
  for (auto& z : prods) CHECK(ball_contains(prod, z));

  // (1 + O(3^5)) / (3 + O(3^5)) = 3^-1 + O(3^3)
  auto q = iv(3, 1, 5) / iv(3, 3, 5);
  CHECK(q.absprec() == 3);
  CHECK(q.center() == PadicScalar::from_mantissa_exp(3, 1, -1));
  auto reps_n = ball_representatives(iv(3, 1, 5), 8);
  auto reps_d = ball_representatives(iv(3, 3, 5), 8);
  for (auto& x : reps_n)
    for (auto& y : reps_d) CHECK(ball_contains(q, x / y));

  // adding an exact zero changes nothing
  auto e = PadicInterval::exact(PadicScalar::zero(3));
  CHECK(iv(3, 7, 4) + e == iv(3, 7, 4));
}

TEST_CASE("exhaustive soundness, p in {2,3}, small precisions") {
  for (long p : {2L, 3L}) {
    long K = 6;
    std::mt19937_64 rng(7 * p);
    for (int trial = 0; trial < 40; ++trial) {
      long na = 1 + (long)(rng() % 4), nb = 1 + (long)(rng() % 4);
      long ca = (long)(rng() % p_power(p, na).convert_to<long>());
      long cb = (long)(rng() % p_power(p, nb).convert_to<long>());
      auto a = iv(p, ca, na), b = iv(p, cb, nb);
      auto reps_a = ball_representatives(a, K);
      auto reps_b = ball_representatives(b, K);

      auto sum = a + b;
      auto prod = a * b;
      for (auto& x : reps_a)
        for (auto& y : reps_b) {
          CHECK(ball_contains(sum, x + y));
          CHECK(ball_contains(prod, x * y));
        }
      if (b.val_known() && !b.is_zeroish()) {
        auto quot = a / b;
        for (auto& x : reps_a)
          for (auto& y : reps_b)
            if (!y.is_zero()) CHECK(ball_contains(quot, x / y));
      } else {
        CHECK_THROWS_AS(a / b, IndeterminateDivision);
      }
    }
  }
}

TEST_CASE("exact values flow through untouched") {
  auto e = PadicInterval::exact(PadicScalar::from_ratio(5, 1, 2));
  CHECK(e.is_exact());
  CHECK((e * e).is_exact());
  CHECK((e + e).center() == PadicScalar(5, 1));
  // exact * interval keeps the interval's scaled precision
  auto x = iv(5, 3, 4);
  auto prod = e * x;
  CHECK(prod.absprec() == 4);  // val(e) = 0
  auto shifted = PadicInterval::exact(PadicScalar(5, 25)) * x;
  CHECK(shifted.absprec() == 6);
  // exact zero absorbs no-information values
  auto zero = PadicInterval::exact(PadicScalar::zero(5));
  auto noinfo = PadicInterval(PadicScalar::zero(5), kNoInfoPrec);
  CHECK((zero * noinfo).is_exact());
}

TEST_CASE("division accounting") {
  // dividing by p^v costs 2v digits on the reciprocal
  auto one = iv(3, 1, 5);
  auto nine = iv(3, 9, 5);
  CHECK((one / nine).absprec() == 5 - 2 * 2 + 0);
  CHECK_THROWS_AS(one / iv(3, 0, 4), IndeterminateDivision);
  CHECK_THROWS_AS(one / PadicInterval::exact(PadicScalar::zero(3)),
                  DivisionByZero);
}

TEST_CASE("interval parse round-trip") {
  for (auto s : {"7*3^0 + O(3^2)", "1*3^-1 + O(3^3)", "0*3^0 + O(3^4)",
                 "1/2*3^0 + O(3^inf)"}) {
    CHECK(PadicInterval::parse(3, s).to_string() == s);
  }
  CHECK(PadicInterval::parse(3, "5*3^0 + O(3^1)") == iv(3, 2, 1));
}

TEST_CASE("reduce_to") {
  auto a = iv(3, 47, 5);
  CHECK(a.reduce_to(2) == iv(3, 2, 2));
  CHECK_THROWS_AS(a.reduce_to(6), NegativePrecision);
}
