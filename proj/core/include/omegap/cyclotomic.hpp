#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "omegap/angle.hpp"
#include "omegap/prime.hpp"

namespace omegap {

/// An exact element of the p^m-th cyclotomic field, held as sparse
/// coordinates in the power basis {zeta^e : 0 <= e < phi(p^m)},
/// zeta = exp(2*pi*i/p^m). Values are kept reduced modulo the cyclotomic
/// polynomial Phi_{p^m}(t) = sum_{j<p} t^{j*p^{m-1}} and at the minimal
/// order, so equality is plain coefficient comparison. Order 0 is Q itself.
class CyclotomicValue {
 public:
  static CyclotomicValue zero(Prime prime) { return CyclotomicValue(prime); }
  static CyclotomicValue one(Prime prime) { return from_rational(prime, mpq_class(1)); }
  static CyclotomicValue from_rational(Prime prime, const mpq_class& c);

  /// exp(2*pi*i*a) as a field element: the basis monomial of exponent r for
  /// a = r/p^m, reduced.
  static CyclotomicValue root_of_unity(const Angle& a);

  const Prime& prime() const { return prime_; }
  long order() const { return order_; }
  const std::map<long, mpq_class>& coefficients() const { return coeff_; }

  bool is_zero() const { return coeff_.empty(); }
  bool is_rational() const { return order_ == 0; }
  /// The value as a rational; throws when the value is irrational.
  mpq_class rational_value() const;

  CyclotomicValue operator+(const CyclotomicValue& o) const;
  CyclotomicValue operator-(const CyclotomicValue& o) const;
  CyclotomicValue operator*(const CyclotomicValue& o) const;
  CyclotomicValue operator-() const;
  CyclotomicValue scaled(const mpq_class& c) const;
  CyclotomicValue conjugate() const;

  friend bool operator==(const CyclotomicValue& a, const CyclotomicValue& b) {
    if (a.prime_ != b.prime_) throw std::domain_error("CyclotomicValue: mismatched primes");
    return a.order_ == b.order_ && a.coeff_ == b.coeff_;
  }
  friend bool operator!=(const CyclotomicValue& a, const CyclotomicValue& b) { return !(a == b); }

  /// Rendered as a sum of coeff * e(r/p^m) terms, e(t) = exp(2*pi*i*t).
  std::string to_string() const;

 private:
  explicit CyclotomicValue(Prime prime) : prime_(prime), order_(0) {}

  // Accumulate raw exponent/coefficient pairs at order m, then reduce
  // modulo Phi and compress to minimal order.
  static CyclotomicValue build(Prime prime, long order, std::map<long, mpq_class> raw);

  long phi() const;  // phi(p^order), the basis size

  Prime prime_;
  long order_;
  std::map<long, mpq_class> coeff_;
};

}  // namespace omegap
