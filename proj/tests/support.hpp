#pragma once

#include <random>

#include "omegap/scalar.hpp"

namespace omegap::testing {

// Random exact rational with a prescribed p-adic valuation: p^v * (a/b)
// with a, b prime to p.
inline mpq_class random_unit_rational(std::mt19937_64& rng, long p, long max_abs = 200) {
  std::uniform_int_distribution<long> d(1, max_abs);
  long a = d(rng);
  long b = d(rng);
  while (a % p == 0) a = d(rng);
  while (b % p == 0) b = d(rng);
  mpq_class q(a, b);
  q.canonicalize();
  if (rng() & 1) q = -q;
  return q;
}

inline PAdicScalar random_scalar(std::mt19937_64& rng, Prime prime, long val_lo, long val_hi) {
  std::uniform_int_distribution<long> dv(val_lo, val_hi);
  return PAdicScalar(prime, random_unit_rational(rng, prime.value()) * pow_p(prime.value(), dv(rng)));
}

}  // namespace omegap::testing
