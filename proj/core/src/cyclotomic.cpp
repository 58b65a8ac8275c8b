#include "omegap/cyclotomic.hpp"

#include <sstream>

namespace omegap {

namespace {

long pow_long(long p, long e) {
  long r = 1;
  while (e-- > 0) r *= p;
  return r;
}

}  // namespace

long CyclotomicValue::phi() const {
  if (order_ == 0) return 1;
  return pow_long(prime_.value(), order_ - 1) * (prime_.value() - 1);
}

CyclotomicValue CyclotomicValue::build(Prime prime, long order, std::map<long, mpq_class> raw) {
  long p = prime.value();
  CyclotomicValue out(prime);
  out.order_ = order;
  long modulus = pow_long(p, order);
  long basis = order == 0 ? 1 : pow_long(p, order - 1) * (p - 1);
  long stride = order == 0 ? 1 : pow_long(p, order - 1);

  std::map<long, mpq_class> reduced;
  auto add_term = [&reduced](long e, const mpq_class& c) {
    auto it = reduced.find(e);
    if (it == reduced.end()) {
      if (sgn(c) != 0) reduced.emplace(e, c);
    } else {
      it->second += c;
      if (sgn(it->second) == 0) reduced.erase(it);
    }
  };

  for (auto& [e_raw, c] : raw) {
    if (sgn(c) == 0) continue;
    long e = ((e_raw % modulus) + modulus) % modulus;
    if (e < basis) {
      add_term(e, c);
    } else {
      // zeta^e with e = r + (p-1)*p^{m-1}: rewrite through
      // Phi_{p^m}(zeta) = 0, i.e. zeta^{(p-1)p^{m-1}} = -sum_{j<p-1} zeta^{j p^{m-1}}.
      long r = e - basis;  // r < p^{m-1}
      for (long j = 0; j + 1 < p; ++j) add_term(r + j * stride, -c);
    }
  }

  out.coeff_ = std::move(reduced);
  // Compress to the minimal order: the subfield of order m-1 is spanned by
  // the basis monomials with exponent divisible by p.
  while (out.order_ > 0) {
    bool divisible = true;
    for (auto& [e, c] : out.coeff_) {
      if (e % p != 0) {
        divisible = false;
        break;
      }
    }
    if (!divisible) break;
    std::map<long, mpq_class> shrunk;
    for (auto& [e, c] : out.coeff_) shrunk.emplace(e / p, c);
    out.coeff_ = std::move(shrunk);
    --out.order_;
  }
  return out;
}

CyclotomicValue CyclotomicValue::from_rational(Prime prime, const mpq_class& c) {
  std::map<long, mpq_class> raw;
  if (sgn(c) != 0) raw.emplace(0, c);
  return build(prime, 0, std::move(raw));
}

CyclotomicValue CyclotomicValue::root_of_unity(const Angle& a) {
  long m = a.order_exponent();
  long r = static_cast<long>(mpq_class(a.value() * pow_p(a.prime().value(), m)).get_num().get_si());
  std::map<long, mpq_class> raw;
  raw.emplace(r, mpq_class(1));
  return build(a.prime(), m, std::move(raw));
}

mpq_class CyclotomicValue::rational_value() const {
  if (order_ != 0) throw std::domain_error("CyclotomicValue: value is not rational");
  if (coeff_.empty()) return mpq_class(0);
  return coeff_.begin()->second;
}

CyclotomicValue CyclotomicValue::operator+(const CyclotomicValue& o) const {
  if (prime_ != o.prime_) throw std::domain_error("CyclotomicValue: mismatched primes");
  long m = std::max(order_, o.order_);
  long p = prime_.value();
  long lift_a = pow_long(p, m - order_);
  long lift_b = pow_long(p, m - o.order_);
  std::map<long, mpq_class> raw;
  for (auto& [e, c] : coeff_) raw[e * lift_a] += c;
  for (auto& [e, c] : o.coeff_) raw[e * lift_b] += c;
  return build(prime_, m, std::move(raw));
}

CyclotomicValue CyclotomicValue::operator-(const CyclotomicValue& o) const { return *this + (-o); }

CyclotomicValue CyclotomicValue::operator-() const {
  CyclotomicValue out = *this;
  for (auto& [e, c] : out.coeff_) c = -c;
  return out;
}

CyclotomicValue CyclotomicValue::scaled(const mpq_class& c) const {
  if (sgn(c) == 0) return zero(prime_);
  CyclotomicValue out = *this;
  for (auto& [e, coef] : out.coeff_) coef *= c;
  return out;
}

CyclotomicValue CyclotomicValue::operator*(const CyclotomicValue& o) const {
  if (prime_ != o.prime_) throw std::domain_error("CyclotomicValue: mismatched primes");
  long m = std::max(order_, o.order_);
  long p = prime_.value();
  long lift_a = pow_long(p, m - order_);
  long lift_b = pow_long(p, m - o.order_);
  std::map<long, mpq_class> raw;
  for (auto& [ea, ca] : coeff_) {
    for (auto& [eb, cb] : o.coeff_) {
      raw[ea * lift_a + eb * lift_b] += ca * cb;
    }
  }
  return build(prime_, m, std::move(raw));
}

CyclotomicValue CyclotomicValue::conjugate() const {
  long modulus = pow_long(prime_.value(), order_);
  std::map<long, mpq_class> raw;
  for (auto& [e, c] : coeff_) raw[(modulus - e) % modulus] += c;
  return build(prime_, order_, std::move(raw));
}

std::string CyclotomicValue::to_string() const {
  if (coeff_.empty()) return "0";
  std::ostringstream os;
  long modulus = pow_long(prime_.value(), order_);
  bool first = true;
  for (auto& [e, c] : coeff_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (e != 0) os << "*e(" << e << "/" << modulus << ")";
  }
  return os.str();
}

}  // namespace omegap
