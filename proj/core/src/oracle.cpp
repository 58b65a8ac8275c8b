#include "omegap/oracle.hpp"

namespace omegap {

namespace {

mpz_class pow_pz(long p, long e) {
  mpz_class n;
  mpz_ui_pow_ui(n.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return n;
}

Valuation support_valuation(const Component& c, long p) {
  Valuation vs = rational_valuation(c.shift.value(), p);
  if (c.level.is_infinite()) return vs;
  return min(vs, Valuation(c.level.value()));
}

}  // namespace

OracleWindow oracle_window(const Distribution& mu1, const Distribution& mu2,
                           const PAdicScalar& alpha, long margin) {
  if (margin < 1) throw std::invalid_argument("oracle_window: margin must be >= 1");
  if (alpha.is_zero()) throw std::domain_error("oracle_window: alpha must be nonzero");
  Valuation lo = Valuation::infinity();
  bool any_level = false;
  long max_level = 0;
  for (const Distribution* mu : {&mu1, &mu2}) {
    Distribution canon = canonical(*mu);
    for (const auto& c : canon.components()) {
      lo = min(lo, support_valuation(c, mu->p()));
      if (c.level.is_finite()) {
        max_level = any_level ? std::max(max_level, c.level.value()) : c.level.value();
        any_level = true;
      }
    }
  }
  OracleWindow w;
  w.lo = lo.is_finite() ? lo.value() : 0;
  w.hi = (any_level ? max_level : w.lo) + margin;
  return w;
}

QuotientDistribution::QuotientDistribution(Prime prime, OracleWindow window,
                                           std::map<mpz_class, mpq_class> prob, bool faithful)
    : prime_(prime), window_(window), prob_(std::move(prob)), faithful_(faithful) {
  mpq_class total(0);
  for (const auto& [u, w] : prob_) total += w;
  if (total != 1) throw std::logic_error("QuotientDistribution: probabilities sum to " + total.get_str());
}

mpz_class QuotientDistribution::modulus() const {
  return pow_pz(prime_.value(), window_.hi - window_.lo);
}

QuotientDistribution project_to_quotient(const Distribution& mu, OracleWindow window) {
  if (window.lo >= window.hi) throw std::invalid_argument("project_to_quotient: lo must be < hi");
  long p = mu.p();
  mpz_class modulus = pow_pz(p, window.hi - window.lo);
  std::map<mpz_class, mpq_class> prob;
  bool faithful = true;

  auto rep_index = [&](const PAdicScalar& x) {
    mpq_class scaled = reduce_mod_level(x, window.hi).value() / pow_p(p, window.lo);
    scaled.canonicalize();
    if (scaled.get_den() != 1)
      throw std::invalid_argument("project_to_quotient: support exceeds the window");
    return mpz_class(scaled.get_num());
  };

  Distribution canon = canonical(mu);
  for (const auto& c : canon.components()) {
    if (support_valuation(c, p) < Valuation(window.lo))
      throw std::invalid_argument("project_to_quotient: support exceeds the window");
    if (c.level.is_infinite()) {
      prob[rep_index(c.shift)] += c.weight;
      faithful = false;
      continue;
    }
    long k = c.level.value();
    if (k > window.hi)
      throw std::invalid_argument("project_to_quotient: component level finer than the window");
    mpz_class count = pow_pz(p, window.hi - k);
    mpz_class stride = pow_pz(p, k - window.lo);
    mpq_class share = c.weight / mpq_class(count);
    mpz_class base = rep_index(c.shift);
    for (mpz_class t = 0; t < count; ++t) {
      mpz_class u = base + t * stride;
      mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), modulus.get_mpz_t());
      prob[u] += share;
    }
  }
  return QuotientDistribution(mu.prime(), window, std::move(prob), faithful);
}

QuotientDistribution quotient_convolve(const QuotientDistribution& q1,
                                       const QuotientDistribution& q2) {
  if (q1.prime() != q2.prime() || q1.window().lo != q2.window().lo ||
      q1.window().hi != q2.window().hi)
    throw std::domain_error("quotient_convolve: incompatible quotients");
  mpz_class modulus = q1.modulus();
  std::map<mpz_class, mpq_class> prob;
  for (const auto& [a, wa] : q1.probabilities()) {
    for (const auto& [b, wb] : q2.probabilities()) {
      mpz_class s = a + b;
      mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), modulus.get_mpz_t());
      prob[s] += wa * wb;
    }
  }
  return QuotientDistribution(q1.prime(), q1.window(), std::move(prob),
                              q1.faithful() && q2.faithful());
}

JointLaw::JointLaw(Prime prime, OracleWindow window,
                   std::map<std::pair<mpz_class, mpz_class>, mpq_class> prob)
    : prime_(prime), window_(window), prob_(std::move(prob)) {}

std::map<mpz_class, mpq_class> JointLaw::marginal_first() const {
  std::map<mpz_class, mpq_class> out;
  for (const auto& [st, w] : prob_) out[st.first] += w;
  return out;
}

std::map<mpz_class, mpq_class> JointLaw::marginal_second() const {
  std::map<mpz_class, mpq_class> out;
  for (const auto& [st, w] : prob_) out[st.second] += w;
  return out;
}

bool JointLaw::factorizes() const {
  std::map<mpz_class, mpq_class> m1 = marginal_first();
  std::map<mpz_class, mpq_class> m2 = marginal_second();
  for (const auto& [s, ws] : m1) {
    for (const auto& [t, wt] : m2) {
      mpq_class expected = ws * wt;
      auto it = prob_.find({s, t});
      mpq_class actual = (it == prob_.end()) ? mpq_class(0) : it->second;
      if (actual != expected) return false;
    }
  }
  return true;
}

JointLaw joint_law(const QuotientDistribution& q1, const QuotientDistribution& q2,
                   const PAdicScalar& alpha) {
  if (q1.prime() != q2.prime()) throw std::domain_error("joint_law: mismatched primes");
  if (alpha.is_zero() || valuation(alpha) < Valuation(0))
    throw std::invalid_argument("joint_law: alpha incompatible with window (needs v(alpha) >= 0)");
  long p = q1.prime().value();
  mpz_class modulus = q1.modulus();

  // alpha acts on representatives as multiplication by
  // p^k * num(unit) * den(unit)^{-1} mod p^{hi-lo}.
  long k = valuation(alpha).value();
  mpq_class unit = alpha.value() / pow_p(p, k);
  unit.canonicalize();
  mpz_class den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), unit.get_den_mpz_t(), modulus.get_mpz_t()) == 0)
    throw std::logic_error("joint_law: unit denominator not invertible (internal)");
  mpz_class factor = pow_pz(p, k) * unit.get_num() * den_inv;
  mpz_fdiv_r(factor.get_mpz_t(), factor.get_mpz_t(), modulus.get_mpz_t());

  std::map<std::pair<mpz_class, mpz_class>, mpq_class> prob;
  for (const auto& [a, wa] : q1.probabilities()) {
    for (const auto& [b, wb] : q2.probabilities()) {
      mpz_class s = a + b;
      mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), modulus.get_mpz_t());
      mpz_class t = a + b * factor;
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), modulus.get_mpz_t());
      prob[{s, t}] += wa * wb;
    }
  }
  return JointLaw(q1.prime(), q1.window(), std::move(prob));
}

IndependenceVerdict oracle_check(const Distribution& mu1, const Distribution& mu2,
                                 const PAdicScalar& alpha, std::optional<OracleWindow> window) {
  if (mu1.prime() != mu2.prime() || alpha.prime() != mu1.prime())
    throw std::domain_error("oracle_check: mismatched primes");
  if (alpha.is_zero()) throw std::domain_error("oracle_check: alpha must be nonzero");

  IndependenceVerdict verdict;
  verdict.method = "oracle";

  Distribution work1 = canonical(mu1);
  Distribution work2 = canonical(mu2);
  PAdicScalar alpha_eff = alpha;
  if (valuation(alpha) < Valuation(0)) {
    work2 = canonical(pushforward(alpha, work2));
    alpha_eff = PAdicScalar::one(alpha.prime()) / alpha;
    verdict.negative_k_reduced = true;
  }

  OracleWindow w = window ? *window : oracle_window(work1, work2, alpha_eff);
  verdict.window.lo = w.lo;
  verdict.window.hi = w.hi;
  verdict.window.p = mu1.p();
  verdict.window.deep_probe_levels = 0;

  QuotientDistribution q1 = project_to_quotient(work1, w);
  QuotientDistribution q2 = project_to_quotient(work2, w);
  JointLaw joint = joint_law(q1, q2, alpha_eff);
  verdict.pairs_evaluated =
      static_cast<unsigned long>(q1.probabilities().size() * q2.probabilities().size());

  verdict.independent = joint.factorizes();
  verdict.oracle_faithful = q1.faithful() && q2.faithful();
  if (verdict.independent && !verdict.oracle_faithful)
    verdict.note = "independent at this level only: point masses make the projection lossy";
  return verdict;
}

}  // namespace omegap
