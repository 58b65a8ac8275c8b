#pragma once

#include <map>

#include "omegap/independence.hpp"

namespace omegap {

/// Support-side window for the quotient projection: elements are reduced
/// modulo Lambda_hi and must lie inside Lambda_lo, so the quotient
/// Lambda_lo / Lambda_hi is a cyclic group of order p^{hi-lo}.
struct OracleWindow {
  long lo = 0;
  long hi = 2;
};

/// A window whose quotient carries the supports of both distributions:
/// lo = the lowest support valuation, hi = the finest finite level + margin.
OracleWindow oracle_window(const Distribution& mu1, const Distribution& mu2,
                           const PAdicScalar& alpha, long margin = 2);

/// Exact law of a distribution pushed to Lambda_lo / Lambda_hi. Keys are the
/// integers U of the canonical representatives U * p^lo. A ball component
/// spreads its weight uniformly over its p^{hi-k} cosets; a point mass
/// lands on a single atom. The projection determines the distribution
/// uniquely iff there is no point-mass component.
class QuotientDistribution {
 public:
  QuotientDistribution(Prime prime, OracleWindow window, std::map<mpz_class, mpq_class> prob,
                       bool faithful);

  const Prime& prime() const { return prime_; }
  const OracleWindow& window() const { return window_; }
  const std::map<mpz_class, mpq_class>& probabilities() const { return prob_; }
  bool faithful() const { return faithful_; }
  mpz_class modulus() const;  // p^{hi-lo}

 private:
  Prime prime_;
  OracleWindow window_;
  std::map<mpz_class, mpq_class> prob_;
  bool faithful_;
};

QuotientDistribution project_to_quotient(const Distribution& mu, OracleWindow window);

/// Convolution inside the quotient group.
QuotientDistribution quotient_convolve(const QuotientDistribution& q1,
                                       const QuotientDistribution& q2);

/// Exact joint law of (g1 + g2, g1 + alpha*g2) for independent quotient
/// variables g1 ~ q1, g2 ~ q2. Requires v(alpha) >= 0 so that multiplication
/// by alpha descends to the quotient; alpha acts through its residue.
class JointLaw {
 public:
  JointLaw(Prime prime, OracleWindow window,
           std::map<std::pair<mpz_class, mpz_class>, mpq_class> prob);

  const std::map<std::pair<mpz_class, mpz_class>, mpq_class>& probabilities() const {
    return prob_;
  }
  std::map<mpz_class, mpq_class> marginal_first() const;
  std::map<mpz_class, mpq_class> marginal_second() const;

  /// Exact product factorization test: P(s,t) = P1(s) * P2(t) everywhere.
  bool factorizes() const;

 private:
  Prime prime_;
  OracleWindow window_;
  std::map<std::pair<mpz_class, mpz_class>, mpq_class> prob_;
};

JointLaw joint_law(const QuotientDistribution& q1, const QuotientDistribution& q2,
                   const PAdicScalar& alpha);

/// Brute-force independence verdict by joint-law factorization on the
/// quotient. Never touches characteristic functions, which is what makes
/// agreement with check_independence a meaningful cross-check.
/// "dependent" is always conclusive; "independent" is conclusive exactly
/// when both projections are faithful (ball-only inputs), and otherwise is
/// a level-indexed necessary condition (flagged in the note).
IndependenceVerdict oracle_check(const Distribution& mu1, const Distribution& mu2,
                                 const PAdicScalar& alpha,
                                 std::optional<OracleWindow> window = std::nullopt);

}  // namespace omegap
