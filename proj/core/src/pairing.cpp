#include "omegap/pairing.hpp"

namespace omegap {

Angle pairing(const PAdicScalar& x, const PAdicScalar& y) {
  x.require_same_prime(y);
  PAdicScalar z = x * y / PAdicScalar(x.prime(), x.p());
  return fractional_part(z);
}

std::pair<long, long> pairing_window(const PAdicScalar& x, const PAdicScalar& y) {
  if (x.is_zero() || y.is_zero()) return {0, 1};
  long vx = valuation(x).value();
  long vy = valuation(y).value();
  long lo = std::min({vx, vy, 0L});
  long hi = std::max({-vx, -vy, 0L}) + 1;
  return {lo, hi};
}

Angle pairing_digit_sum(const PAdicScalar& x, const PAdicScalar& y, long lo, long hi) {
  x.require_same_prime(y);
  Prime prime = x.prime();
  if (x.is_zero() || y.is_zero()) return Angle::zero(prime);

  long vx = valuation(x).value();
  long vy = valuation(y).value();
  // Contributing terms have x-index n in [v(x), -v(y)] and y-index -s in
  // [v(y), -v(x)]; everything else is an integer summand or a zero digit.
  if (lo > vx || lo > vy || hi <= -vx || hi <= -vy)
    throw std::invalid_argument("pairing_digit_sum: window cannot cover the contributing digits");

  std::vector<int> dx = digits(x, lo, hi);
  std::vector<int> dy = digits(y, lo, hi);
  long p = x.p();

  mpq_class sum(0);
  for (long n = lo; n < hi; ++n) {
    int xn = dx[static_cast<size_t>(n - lo)];
    if (xn == 0) continue;
    // s >= n with the y-digit index -s inside the window.
    for (long s = std::max(n, -(hi - 1)); s <= -lo; ++s) {
      int ys = dy[static_cast<size_t>(-s - lo)];
      if (ys == 0) continue;
      long e = n - s - 1;
      if (e >= 0) continue;  // integer contribution, irrelevant mod 1
      sum += mpq_class(xn * ys) * pow_p(p, e);
    }
  }
  return Angle(prime, sum);
}

}  // namespace omegap
