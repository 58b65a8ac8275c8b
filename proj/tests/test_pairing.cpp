#include <doctest.h>

#include <random>

#include "omegap/pairing.hpp"
#include "support.hpp"

using namespace omegap;

namespace {
const Prime p2(2);
const Prime p3(3);

Angle pair_of(const Prime& p, const mpq_class& x, const mpq_class& y) {
  return pairing(PAdicScalar(p, x), PAdicScalar(p, y));
}
}  // namespace

TEST_CASE("pairing basics") {
  CHECK(pair_of(p2, 1, 1).value() == mpq_class(1, 2));  // character value -1
  CHECK(pair_of(p3, 0, mpq_class(7, 9)).is_zero());
  // x in Lambda_m pairs trivially with y in Lambda_{-m+1}.
  for (long m : {-2L, 0L, 3L}) {
    PAdicScalar x(p3, mpq_class(2) * pow_p(3, m));
    PAdicScalar y(p3, mpq_class(1) * pow_p(3, -m + 1));
    CHECK(pairing(x, y).is_zero());
  }
}

TEST_CASE("digit-sum evaluation matches the pinned examples") {
  CHECK(pairing_digit_sum(PAdicScalar(p2, 1), PAdicScalar(p2, 1), -1, 2).value() == mpq_class(1, 2));
  CHECK(pairing_digit_sum(PAdicScalar(p2, mpq_class(1, 2)), PAdicScalar(p2, 1), -1, 2).value() ==
        mpq_class(1, 4));
  CHECK(pairing_digit_sum(PAdicScalar(p3, 1), PAdicScalar(p3, mpq_class(1, 3)), -1, 2).value() ==
        mpq_class(1, 9));
}

TEST_CASE("digit-sum window validation") {
  PAdicScalar x(p3, mpq_class(1, 9));  // v = -2
  PAdicScalar y(p3, 1);
  CHECK_THROWS_AS(pairing_digit_sum(x, y, -1, 3), std::invalid_argument);  // lo misses v(x)
  CHECK_THROWS_AS(pairing_digit_sum(y, x, 0, 1), std::invalid_argument);   // hi misses -v(y)
  auto [lo, hi] = pairing_window(x, y);
  CHECK(pairing_digit_sum(x, y, lo, hi) == pairing(x, y));
  // Zero inputs need no window at all.
  CHECK(pairing_digit_sum(PAdicScalar::zero(p3), x, 0, 1).is_zero());
}

TEST_CASE("closed form agrees with the literal digit sum") {
  std::mt19937_64 rng(31);
  for (const Prime& p : {p2, p3, Prime(5)}) {
    for (int i = 0; i < 400; ++i) {
      PAdicScalar x = testing::random_scalar(rng, p, -6, 6);
      PAdicScalar y = testing::random_scalar(rng, p, -6, 6);
      auto [lo, hi] = pairing_window(x, y);
      CHECK(pairing(x, y) == pairing_digit_sum(x, y, lo, hi));
      // A wider window must not change the value.
      CHECK(pairing(x, y) == pairing_digit_sum(x, y, lo - 2, hi + 2));
    }
  }
}

TEST_CASE("pairing is bi-additive") {
  std::mt19937_64 rng(32);
  for (const Prime& p : {p2, p3}) {
    for (int i = 0; i < 300; ++i) {
      PAdicScalar x = testing::random_scalar(rng, p, -5, 5);
      PAdicScalar x2 = testing::random_scalar(rng, p, -5, 5);
      PAdicScalar y = testing::random_scalar(rng, p, -5, 5);
      CHECK(pairing(x + x2, y) == pairing(x, y) + pairing(x2, y));
      CHECK(pairing(x, y + x2) == pairing(x, y) + pairing(x, x2));
    }
  }
}

TEST_CASE("multiplication operators are self-adjoint across the pairing") {
  std::mt19937_64 rng(33);
  for (const Prime& p : {p2, p3}) {
    for (int i = 0; i < 300; ++i) {
      PAdicScalar a = testing::random_scalar(rng, p, -3, 3);
      PAdicScalar x = testing::random_scalar(rng, p, -4, 4);
      PAdicScalar y = testing::random_scalar(rng, p, -4, 4);
      CHECK(pairing(a * x, y) == pairing(x, a * y));
    }
  }
}

TEST_CASE("annihilator of the ball Lambda_m is Lambda_{1-m}") {
  for (const Prime& p : {p2, p3}) {
    for (long m = -3; m <= 3; ++m) {
      for (long r = 1; r < p.value(); ++r) {
        PAdicScalar x(p, mpq_class(r) * pow_p(p.value(), m));
        for (long t = -4; t <= 4; ++t) {
          for (long s = 1; s < p.value(); ++s) {
            // y = s*p^t and a perturbed variant with a second digit.
            mpq_class plain = mpq_class(s) * pow_p(p.value(), t);
            mpq_class perturbed = plain + pow_p(p.value(), t + 2);
            for (const mpq_class& yq : {plain, perturbed}) {
              PAdicScalar y(p, yq);
              bool zero = pairing(x, y).is_zero();
              bool annihilated = Valuation(t) >= Valuation(-m + 1);
              CHECK(zero == annihilated);
            }
          }
        }
      }
    }
  }
}
