#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "omegap/extint.hpp"
#include "omegap/prime.hpp"

namespace omegap {

/// An exactly represented element of the rational subfield of the p-adic
/// numbers. The rational subfield is dense, closed under all field
/// operations, and admits exact valuations and on-demand digit windows,
/// which is all the rest of the library ever needs.
class PAdicScalar {
 public:
  PAdicScalar(Prime prime, mpq_class value) : prime_(prime), value_(std::move(value)) {
    value_.canonicalize();
  }
  PAdicScalar(Prime prime, long value) : prime_(prime), value_(value) {}

  /// Grammar: optional sign, decimal integer, optional "/" and positive
  /// decimal integer; no whitespace.
  static PAdicScalar parse(std::string_view text, Prime prime);

  static PAdicScalar zero(Prime prime) { return PAdicScalar(prime, 0); }
  static PAdicScalar one(Prime prime) { return PAdicScalar(prime, 1); }

  const mpq_class& value() const { return value_; }
  const Prime& prime() const { return prime_; }
  long p() const { return prime_.value(); }

  bool is_zero() const { return sgn(value_) == 0; }

  Valuation valuation() const;

  PAdicScalar operator+(const PAdicScalar& o) const { return combined(o, value_ + o.value_); }
  PAdicScalar operator-(const PAdicScalar& o) const { return combined(o, value_ - o.value_); }
  PAdicScalar operator*(const PAdicScalar& o) const { return combined(o, value_ * o.value_); }
  PAdicScalar operator/(const PAdicScalar& o) const;
  PAdicScalar operator-() const { return PAdicScalar(prime_, mpq_class(-value_)); }

  friend bool operator==(const PAdicScalar& a, const PAdicScalar& b) {
    a.require_same_prime(b);
    return a.value_ == b.value_;
  }
  friend bool operator!=(const PAdicScalar& a, const PAdicScalar& b) { return !(a == b); }

  std::string to_string() const;

  void require_same_prime(const PAdicScalar& o) const {
    if (prime_ != o.prime_) throw std::domain_error("PAdicScalar: mismatched primes");
  }

 private:
  PAdicScalar combined(const PAdicScalar& o, mpq_class v) const {
    require_same_prime(o);
    return PAdicScalar(prime_, std::move(v));
  }

  Prime prime_;
  mpq_class value_;
};

/// v_p of an exact rational; v(0) = +inf.
Valuation rational_valuation(const mpq_class& q, long p);

inline Valuation valuation(const PAdicScalar& x) { return rational_valuation(x.value(), x.p()); }

/// p^e as an exact rational (e may be negative).
mpq_class pow_p(long p, long e);

/// Base-p digits of x for indices lo <= j < hi, each in {0, ..., p-1}.
/// The digit sum over j < hi is congruent to x modulo Lambda_hi.
std::vector<int> digits(const PAdicScalar& x, long lo, long hi);

/// Canonical representative of the coset x + Lambda_level: the truncated
/// digit sum sum_{j=v(x)}^{level-1} x_j p^j, a nonnegative rational.
/// Two scalars reduce equally iff their difference lies in Lambda_level.
PAdicScalar reduce_mod_level(const PAdicScalar& x, long level);

/// Residue of a valuation-zero scalar mod p, in {1, ..., p-1}.
int unit_residue(const PAdicScalar& x);

/// alpha = p^k * c with c a unit of the p-adic integers.
struct AutomorphismDecomposition {
  long k;                             // v(alpha)
  int unit_residue_mod_p;             // c mod p, in {1, ..., p-1}
  Valuation one_minus_alpha_valuation;  // v(1 - alpha); +inf when alpha = 1
};

AutomorphismDecomposition decompose_automorphism(const PAdicScalar& alpha);

}  // namespace omegap
