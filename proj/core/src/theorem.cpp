#include "omegap/theorem.hpp"

namespace omegap {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::K0Degenerate: return "K0-degenerate";
    case CaseTag::K0Idempotent: return "K0-idempotent";
    case CaseTag::K1: return "K1";
    case CaseTag::KCounterexample: return "K-counterexample";
  }
  return "?";
}

TheoremCase classify(const PAdicScalar& alpha) {
  if (alpha.is_zero()) throw std::domain_error("classify: alpha must be nonzero");
  AutomorphismDecomposition d = decompose_automorphism(alpha);
  TheoremCase out;
  out.k = d.k;
  out.c0 = d.unit_residue_mod_p;
  if (d.k == 0) {
    if (d.unit_residue_mod_p == 1) {
      out.tag = CaseTag::K0Degenerate;
      out.conclusion = "independence forces both distributions to be degenerate";
    } else {
      out.tag = CaseTag::K0Idempotent;
      out.conclusion =
          "independence forces both distributions to be shifted Haar measures of one common compact subgroup";
    }
  } else if (d.k == 1 || d.k == -1) {
    out.tag = CaseTag::K1;
    out.conclusion = "independence forces at least one distribution to be idempotent";
  } else {
    out.tag = CaseTag::KCounterexample;
    out.conclusion =
        "no structural conclusion: independent pairs with both components non-idempotent exist";
    out.witnesses = build_counterexample(alpha.prime(), d.k, mpq_class(1, 2));
  }
  return out;
}

std::pair<Distribution, Distribution> build_counterexample(Prime prime, long k,
                                                           const mpq_class& a) {
  long ka = k < 0 ? -k : k;
  if (ka < 2) throw std::invalid_argument("build_counterexample: |k| must be >= 2");
  if (!(sgn(a) > 0 && a < 1)) throw std::invalid_argument("build_counterexample: a must be in (0,1)");

  PAdicScalar zero = PAdicScalar::zero(prime);
  Distribution mu1(prime, {Component{a, zero, BallLevel(1)}, Component{1 - a, zero, BallLevel(2 - ka)}});
  Distribution mu2(prime,
                   {Component{a, zero, BallLevel(2 - ka)}, Component{1 - a, zero, BallLevel(1 - ka)}});
  if (k < 0) {
    // The pair for v(alpha) = -|k| is the |k| pair with the second law
    // scaled by p^{|k|}, through the form-swapping symmetry.
    mu2 = pushforward(PAdicScalar(prime, pow_p(prime.value(), ka)), mu2);
  }
  return {std::move(mu1), std::move(mu2)};
}

std::vector<Distribution> standard_family(Prime prime) {
  PAdicScalar zero = PAdicScalar::zero(prime);
  PAdicScalar one = PAdicScalar::one(prime);

  std::vector<Component> pool;
  for (long level : {-1L, 0L, 1L}) {
    for (const PAdicScalar* s : {&zero, &one}) {
      pool.push_back(Component{mpq_class(1), *s, BallLevel(level)});
    }
  }
  pool.push_back(Component{mpq_class(1), zero, BallLevel::infinity()});
  pool.push_back(Component{mpq_class(1), one, BallLevel::infinity()});

  std::vector<Distribution> family;
  auto push_unique = [&family](Distribution d) {
    for (const auto& existing : family) {
      if (same_measure(existing, d)) return;
    }
    family.push_back(std::move(d));
  };

  for (const auto& c : pool) push_unique(Distribution(prime, {c}));

  std::vector<mpq_class> weights = {mpq_class(1, 4), mpq_class(1, 2), mpq_class(3, 4)};
  for (size_t i = 0; i < pool.size(); ++i) {
    for (size_t j = i + 1; j < pool.size(); ++j) {
      for (const mpq_class& w : weights) {
        Component a = pool[i];
        Component b = pool[j];
        a.weight = w;
        b.weight = 1 - w;
        push_unique(Distribution(prime, {a, b}));
      }
    }
  }
  return family;
}

std::vector<std::pair<Distribution, Distribution>> family_pairs(
    const std::vector<Distribution>& family) {
  std::vector<std::pair<Distribution, Distribution>> out;
  out.reserve(family.size() * family.size());
  for (const auto& a : family) {
    for (const auto& b : family) out.emplace_back(a, b);
  }
  return out;
}

namespace {

bool conclusion_holds(const TheoremCase& tc, const Distribution& mu1, const Distribution& mu2,
                      std::string* detail) {
  switch (tc.tag) {
    case CaseTag::K0Degenerate: {
      bool ok = is_degenerate(mu1) && is_degenerate(mu2);
      if (!ok) *detail = "expected both degenerate";
      return ok;
    }
    case CaseTag::K0Idempotent: {
      if (!is_idempotent(mu1) || !is_idempotent(mu2)) {
        *detail = "expected both idempotent";
        return false;
      }
      // Shifted Haar measures of one common subgroup.
      if (idempotent_level(mu1) != idempotent_level(mu2)) {
        *detail = "expected a common subgroup level";
        return false;
      }
      return true;
    }
    case CaseTag::K1: {
      bool ok = is_idempotent(mu1) || is_idempotent(mu2);
      if (!ok) *detail = "expected at least one idempotent";
      return ok;
    }
    case CaseTag::KCounterexample:
      return true;
  }
  return true;
}

}  // namespace

CaseReport verify_case(const PAdicScalar& alpha,
                       const std::vector<std::pair<Distribution, Distribution>>& pairs) {
  CaseReport report;
  report.theorem_case = classify(alpha);
  for (size_t i = 0; i < pairs.size(); ++i) {
    ++report.pairs_checked;
    IndependenceVerdict v = check_independence(pairs[i].first, pairs[i].second, alpha);
    if (!v.independent) continue;
    CaseReport::Entry entry;
    entry.index = i;
    std::string detail = "ok";
    entry.conclusion_holds = conclusion_holds(report.theorem_case, pairs[i].first, pairs[i].second, &detail);
    entry.detail = detail;
    if (!entry.conclusion_holds) ++report.violations;
    report.independent_pairs.push_back(std::move(entry));
  }
  return report;
}

std::vector<NamedExample> named_examples(Prime prime) {
  long p = prime.value();
  PAdicScalar zero = PAdicScalar::zero(prime);
  Distribution haar0 = haar_ball(prime, 0);
  Distribution haar1 = haar_ball(prime, 1);
  Distribution half_mix(prime, {Component{mpq_class(1, 2), zero, BallLevel(1)},
                                Component{mpq_class(1, 2), zero, BallLevel(0)}});

  std::vector<NamedExample> out;
  if (p > 2) {
    // Unit multiplier with residue != 1: the Haar pair on the integers stays
    // independent, so independence cannot force degeneracy.
    out.push_back(NamedExample{"haar-pair-unit-multiplier", PAdicScalar(prime, 2), haar0, haar0,
                               true, true, true});
  }
  // v(alpha) = 1: a half-and-half two-ball mixture against a single ball is
  // independent although the mixture is not idempotent.
  out.push_back(NamedExample{"k1-half-mixture", PAdicScalar(prime, p), haar1, half_mix, true, true,
                             false});
  if (p > 2) {
    out.push_back(NamedExample{"k1-half-mixture-unit2", PAdicScalar(prime, 2 * p), haar1, half_mix,
                               true, true, false});
  }
  // Kac-Bernstein pair: sum and difference. Independent for odd p,
  // dependent for p = 2 unless both laws are degenerate.
  out.push_back(NamedExample{"kac-bernstein-haar-pair", PAdicScalar(prime, -1), haar0, haar0,
                             p > 2, true, true});
  return out;
}

}  // namespace omegap
