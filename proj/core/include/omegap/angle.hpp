#pragma once

#include <gmpxx.h>

#include "omegap/prime.hpp"
#include "omegap/scalar.hpp"

namespace omegap {

/// An element of Z(p^inf): a rational r/p^m in [0,1) with p-power
/// denominator, under addition mod 1. These are the exponents of the
/// characters of the p-adic numbers: the character value is exp(2*pi*i*t).
class Angle {
 public:
  Angle(Prime prime, mpq_class value);

  static Angle zero(Prime prime) { return Angle(prime, mpq_class(0)); }

  const mpq_class& value() const { return value_; }
  const Prime& prime() const { return prime_; }
  bool is_zero() const { return sgn(value_) == 0; }

  /// Minimal m with denominator dividing p^m.
  long order_exponent() const;

  Angle operator+(const Angle& o) const;
  Angle operator-() const;
  Angle scaled(const mpz_class& n) const;

  friend bool operator==(const Angle& a, const Angle& b) {
    if (a.prime_ != b.prime_) throw std::domain_error("Angle: mismatched primes");
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Angle& a, const Angle& b) { return !(a == b); }

  std::string to_string() const { return value_.get_str(); }

 private:
  Prime prime_;
  mpq_class value_;
};

/// The p-adic fractional part: the unique t = r/p^m in [0,1) with
/// v(z - t) >= 0; t = 0 when v(z) >= 0. Computed via the modular inverse
/// of the prime-to-p part of the denominator mod p^m.
Angle fractional_part(const PAdicScalar& z);

}  // namespace omegap
