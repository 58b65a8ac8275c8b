#include "omegap/scalar.hpp"

#include <cctype>

namespace omegap {

PAdicScalar PAdicScalar::parse(std::string_view text, Prime prime) {
  // [+-]? digits ( "/" digits )?   -- no whitespace anywhere
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) throw std::invalid_argument("rational literal: missing integer part: '" + std::string(text) + "'");
  mpz_class num(std::string(text.substr(num_begin, i - num_begin)), 10);
  if (negative) num = -num;
  mpz_class den(1);
  if (i < text.size()) {
    if (text[i] != '/') throw std::invalid_argument("rational literal: unexpected character in '" + std::string(text) + "'");
    ++i;
    size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size())
      throw std::invalid_argument("rational literal: malformed denominator in '" + std::string(text) + "'");
    den = mpz_class(std::string(text.substr(den_begin)), 10);
    if (den == 0) throw std::invalid_argument("rational literal: zero denominator in '" + std::string(text) + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return PAdicScalar(prime, std::move(q));
}

PAdicScalar PAdicScalar::operator/(const PAdicScalar& o) const {
  require_same_prime(o);
  if (o.is_zero()) throw std::domain_error("PAdicScalar: division by zero");
  return PAdicScalar(prime_, mpq_class(value_ / o.value_));
}

std::string PAdicScalar::to_string() const { return value_.get_str(); }

Valuation rational_valuation(const mpq_class& q, long p) {
  if (sgn(q) == 0) return Valuation::infinity();
  mpz_class tmp;
  mpz_class pz(p);
  long vnum = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_num_mpz_t(), pz.get_mpz_t()));
  long vden = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_den_mpz_t(), pz.get_mpz_t()));
  return Valuation(vnum - vden);
}

mpq_class pow_p(long p, long e) {
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return mpq_class(power);
  mpq_class q(1, power);
  q.canonicalize();
  return q;
}

namespace {

// x = p^m * (a/b) with p dividing neither a nor b; the canonical
// representative of x mod Lambda_n is p^m * (a * b^{-1} mod p^{n-m}).
mpq_class reduce_rational(const mpq_class& x, long p, long n) {
  Valuation v = rational_valuation(x, p);
  if (v >= Valuation(n)) return mpq_class(0);
  long m = v.value();
  long e = n - m;  // > 0
  mpq_class unit = x / pow_p(p, m);
  unit.canonicalize();
  mpz_class mod = pow_p(p, e).get_num();
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), unit.get_den_mpz_t(), mod.get_mpz_t()) == 0)
    throw std::logic_error("reduce_mod_level: denominator not invertible (internal)");
  mpz_class t = unit.get_num() * inv;
  mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), mod.get_mpz_t());  // in [0, p^e)
  return mpq_class(t) * pow_p(p, m);
}

}  // namespace

PAdicScalar reduce_mod_level(const PAdicScalar& x, long level) {
  return PAdicScalar(x.prime(), reduce_rational(x.value(), x.p(), level));
}

std::vector<int> digits(const PAdicScalar& x, long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("digits: lo > hi");
  std::vector<int> out(static_cast<size_t>(hi - lo), 0);
  if (x.is_zero()) return out;
  Valuation v = valuation(x);
  if (v >= Valuation(hi)) return out;
  long m = v.value();
  // reduce_mod_level(x, hi) = p^m * t with t a nonnegative integer < p^{hi-m};
  // the base-p digits of t are the p-adic digits of x at indices m..hi-1.
  mpq_class reduced = reduce_rational(x.value(), x.p(), hi);
  mpz_class t = mpq_class(reduced / pow_p(x.p(), m)).get_num();
  for (long j = m; j < hi; ++j) {
    mpz_class r;
    mpz_fdiv_qr_ui(t.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(x.p()));
    if (j >= lo) out[static_cast<size_t>(j - lo)] = static_cast<int>(r.get_si());
  }
  return out;
}

int unit_residue(const PAdicScalar& x) {
  if (valuation(x) != Valuation(0))
    throw std::domain_error("unit_residue: scalar is not a unit");
  mpq_class r = reduce_rational(x.value(), x.p(), 1);
  return static_cast<int>(r.get_num().get_si());
}

AutomorphismDecomposition decompose_automorphism(const PAdicScalar& alpha) {
  if (alpha.is_zero()) throw std::domain_error("decompose_automorphism: 0 is not an automorphism");
  long k = valuation(alpha).value();
  PAdicScalar unit = PAdicScalar(alpha.prime(), mpq_class(alpha.value() / pow_p(alpha.p(), k)));
  int c0 = unit_residue(unit);
  Valuation w = rational_valuation(mpq_class(1 - alpha.value()), alpha.p());
  return AutomorphismDecomposition{k, c0, w};
}

}  // namespace omegap
