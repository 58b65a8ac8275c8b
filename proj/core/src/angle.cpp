#include "omegap/angle.hpp"

namespace omegap {

namespace {

mpq_class mod_one(mpq_class q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  q -= mpq_class(f);
  return q;
}

}  // namespace

Angle::Angle(Prime prime, mpq_class value) : prime_(prime), value_(mod_one(std::move(value))) {
  value_.canonicalize();
  // Denominator must be a power of p.
  mpz_class den = value_.get_den();
  mpz_class pz(prime_.value());
  while (den > 1) {
    if (!mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t()))
      throw std::invalid_argument("Angle: denominator is not a power of p");
    den /= pz;
  }
}

long Angle::order_exponent() const {
  long m = 0;
  mpz_class den = value_.get_den();
  mpz_class pz(prime_.value());
  while (den > 1) {
    den /= pz;
    ++m;
  }
  return m;
}

Angle Angle::operator+(const Angle& o) const {
  if (prime_ != o.prime_) throw std::domain_error("Angle: mismatched primes");
  return Angle(prime_, value_ + o.value_);
}

Angle Angle::operator-() const { return Angle(prime_, -value_); }

Angle Angle::scaled(const mpz_class& n) const { return Angle(prime_, mpq_class(n) * value_); }

Angle fractional_part(const PAdicScalar& z) {
  Valuation v = valuation(z);
  if (v >= Valuation(0)) return Angle::zero(z.prime());
  return Angle(z.prime(), reduce_mod_level(z, 0).value());
}

}  // namespace omegap
