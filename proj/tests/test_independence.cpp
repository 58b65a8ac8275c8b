#include <doctest.h>

#include <random>

#include "omegap/independence.hpp"
#include "omegap/theorem.hpp"
#include "support.hpp"

using namespace omegap;

namespace {
const Prime p2(2);
const Prime p3(3);
const Prime p5(5);

Component ball(const Prime& p, const mpq_class& w, long level, long shift = 0) {
  return Component{w, PAdicScalar(p, shift), BallLevel(level)};
}

Distribution counter_mu1(const Prime& p, long k, const mpq_class& a) {
  return build_counterexample(p, k, a).first;
}
Distribution counter_mu2(const Prime& p, long k, const mpq_class& a) {
  return build_counterexample(p, k, a).second;
}
}  // namespace

TEST_CASE("canonicalize_forms") {
  Distribution mu = haar_ball(p5, 0);
  PAdicScalar one = PAdicScalar::one(p5);
  PAdicScalar alpha(p5, 7);

  CanonicalForms id = canonicalize_forms(one, one, one, alpha, mu, mu);
  CHECK(id.alpha == alpha);
  CHECK(same_measure(id.mu1, mu));
  CHECK(same_measure(id.mu2, mu));

  CanonicalForms f = canonicalize_forms(PAdicScalar(p5, 2), PAdicScalar(p5, 3), one, one, mu, mu);
  CHECK(f.alpha.value() == mpq_class(2, 3));

  CanonicalForms prop = canonicalize_forms(one, one, alpha, alpha, mu, mu);
  CHECK(prop.alpha == one);

  CHECK_THROWS_AS(canonicalize_forms(PAdicScalar::zero(p5), one, one, one, mu, mu),
                  std::domain_error);
}

TEST_CASE("verification window derives from the charfn thresholds") {
  // Counterexample pair at p=3, k=2: thresholds {0,1} and {1,2}.
  auto [mu1, mu2] = build_counterexample(p3, 2, mpq_class(1, 2));
  VerificationWindow w = verification_window(mu1, mu2, PAdicScalar(p3, 9));
  CHECK(w.lo == -2);
  CHECK(w.hi == 2);
  CHECK(w.class_count() == 81);
  CHECK(w.pair_count() == 6561);

  // Unit-ball Haar pair with a unit multiplier: single threshold {1}.
  VerificationWindow w2 = verification_window(haar_ball(p3, 0), haar_ball(p3, 0), PAdicScalar(p3, 2));
  CHECK(w2.lo == -1);
  CHECK(w2.hi == 1);

  // A degenerate pair has no thresholds at all: the minimal window.
  VerificationWindow w3 = verification_window(point_mass(PAdicScalar::zero(p3)),
                                              point_mass(PAdicScalar::zero(p3)), PAdicScalar(p3, 2));
  CHECK(w3.lo == -1);
  CHECK(w3.hi == 1);

  // Margin widens the low side only.
  VerificationWindow w4 =
      verification_window(haar_ball(p3, 0), haar_ball(p3, 0), PAdicScalar(p3, 2), 4);
  CHECK(w4.lo == -3);
  CHECK(w4.hi == 1);
}

TEST_CASE("pinned verdicts") {
  // The constructed pair is independent under alpha = p^k.
  auto [mu1, mu2] = build_counterexample(p3, 2, mpq_class(1, 2));
  IndependenceVerdict v = check_independence(mu1, mu2, PAdicScalar(p3, 9));
  CHECK(v.independent);
  CHECK(!v.witness.has_value());

  // Haar pair on the 3-adic integers: independent for a unit with
  // residue != 1, dependent for residue 1.
  CHECK(check_independence(haar_ball(p3, 0), haar_ball(p3, 0), PAdicScalar(p3, 2)).independent);
  IndependenceVerdict dep = check_independence(haar_ball(p3, 0), haar_ball(p3, 0), PAdicScalar(p3, 4));
  CHECK(!dep.independent);
  REQUIRE(dep.witness.has_value());
  // The witness is conclusive: the functional equation provably fails there.
  CHECK(!functional_equation_holds_at(haar_ball(p3, 0), haar_ball(p3, 0), PAdicScalar(p3, 4),
                                      dep.witness->first, dep.witness->second));
  CHECK(!ball_pair_independent(PAdicScalar(p3, 4), BallLevel(0)));
}

TEST_CASE("the functional equation always holds on the axes") {
  std::mt19937_64 rng(51);
  auto [mu1, mu2] = build_counterexample(p3, 2, mpq_class(1, 3));
  Distribution mu3(p3, {ball(p3, mpq_class(1, 2), 1, 1), ball(p3, mpq_class(1, 2), 0)});
  std::vector<std::pair<Distribution, Distribution>> pairs = {
      {mu1, mu2}, {mu3, haar_ball(p3, 0)}, {haar_ball(p3, 1), mu3}};
  for (const auto& [a, b] : pairs) {
    for (const mpq_class& alpha_q : {mpq_class(2), mpq_class(9), mpq_class(1, 3)}) {
      PAdicScalar alpha(p3, alpha_q);
      PAdicScalar zero = PAdicScalar::zero(p3);
      for (int i = 0; i < 40; ++i) {
        PAdicScalar t = testing::random_scalar(rng, p3, -4, 4);
        CHECK(functional_equation_holds_at(a, b, alpha, t, zero));
        CHECK(functional_equation_holds_at(a, b, alpha, zero, t));
      }
    }
  }
}

TEST_CASE("ball_pair_independent matches the exact checker") {
  // Alphas spanning v(1 - alpha) in [-2, 2] plus the identity.
  std::vector<mpq_class> alphas;
  for (long j = -2; j <= 2; ++j) {
    alphas.push_back(1 + mpq_class(2) * pow_p(3, j));
    alphas.push_back(1 + mpq_class(1, 2) * pow_p(3, j));
  }
  alphas.push_back(mpq_class(1));
  alphas.push_back(mpq_class(3));
  alphas.push_back(mpq_class(1, 3));

  for (const mpq_class& aq : alphas) {
    PAdicScalar alpha(p3, aq);
    bool expected = alpha.value() == 1
                        ? false
                        : rational_valuation(1 - alpha.value(), 3) <= Valuation(0);
    for (long m : {-1L, 0L, 1L}) {
      CHECK(ball_pair_independent(alpha, BallLevel(m)) == expected);
      IndependenceVerdict v = check_independence(haar_ball(p3, m), haar_ball(p3, m), alpha);
      CHECK(v.independent == expected);
    }
  }
  // Level +inf: point mass at zero, trivially independent.
  CHECK(ball_pair_independent(PAdicScalar::one(p3), BallLevel::infinity()));
}

TEST_CASE("negative k normalization is sound") {
  // The k = -2 counterexample pair must be independent under alpha = 1/9.
  auto [mu1, mu2] = build_counterexample(p3, -2, mpq_class(1, 2));
  IndependenceVerdict v = check_independence(mu1, mu2, PAdicScalar(p3, mpq_class(1, 9)));
  CHECK(v.independent);
  CHECK(v.negative_k_reduced);

  // And the reduction maps dependent cases faithfully: a dependent witness
  // found through the swap still violates the original equation.
  IndependenceVerdict dep =
      check_independence(haar_ball(p3, 0), haar_ball(p3, 1), PAdicScalar(p3, mpq_class(1, 3)));
  if (!dep.independent) {
    REQUIRE(dep.witness.has_value());
    CHECK(!functional_equation_holds_at(haar_ball(p3, 0), haar_ball(p3, 1),
                                        PAdicScalar(p3, mpq_class(1, 3)), dep.witness->first,
                                        dep.witness->second));
  }
}

TEST_CASE("verdicts are invariant under translations of either law") {
  std::mt19937_64 rng(52);
  std::vector<std::pair<Distribution, Distribution>> pairs = {
      build_counterexample(p3, 2, mpq_class(1, 2)),
      {haar_ball(p3, 0), haar_ball(p3, 0)},
      {haar_ball(p3, 1), Distribution(p3, {ball(p3, mpq_class(1, 2), 1), ball(p3, mpq_class(1, 2), 0)})},
  };
  std::vector<mpq_class> alphas = {mpq_class(2), mpq_class(4), mpq_class(9), mpq_class(3)};
  for (const auto& [a, b] : pairs) {
    for (const mpq_class& aq : alphas) {
      PAdicScalar alpha(p3, aq);
      bool base = check_independence(a, b, alpha).independent;
      for (int i = 0; i < 4; ++i) {
        PAdicScalar c1 = testing::random_scalar(rng, p3, -2, 2);
        PAdicScalar c2 = testing::random_scalar(rng, p3, -2, 2);
        Distribution ta = convolve(a, point_mass(c1));
        Distribution tb = convolve(b, point_mass(c2));
        CHECK(check_independence(ta, tb, alpha).independent == base);
      }
    }
  }
}

TEST_CASE("verdicts are invariant under simultaneous rescaling") {
  std::mt19937_64 rng(53);
  auto [mu1, mu2] = build_counterexample(p3, 2, mpq_class(1, 2));
  std::vector<std::pair<Distribution, Distribution>> pairs = {
      {mu1, mu2}, {haar_ball(p3, 0), haar_ball(p3, 0)}};
  for (const auto& [a, b] : pairs) {
    for (const mpq_class& aq : {mpq_class(9), mpq_class(4)}) {
      PAdicScalar alpha(p3, aq);
      bool base = check_independence(a, b, alpha).independent;
      for (int i = 0; i < 4; ++i) {
        PAdicScalar gamma = testing::random_scalar(rng, p3, -2, 2);
        CHECK(check_independence(pushforward(gamma, a), pushforward(gamma, b), alpha).independent ==
              base);
      }
    }
  }
}

TEST_CASE("independent pairs stay independent after symmetrization") {
  std::vector<std::tuple<Distribution, Distribution, PAdicScalar>> independent_cases = {
      {counter_mu1(p3, 2, mpq_class(1, 2)), counter_mu2(p3, 2, mpq_class(1, 2)), PAdicScalar(p3, 9)},
      {haar_ball(p3, 0), haar_ball(p3, 0), PAdicScalar(p3, 2)},
      {haar_ball(p2, 1),
       Distribution(p2, {ball(p2, mpq_class(1, 2), 1), ball(p2, mpq_class(1, 2), 0)}),
       PAdicScalar(p2, 2)},
  };
  for (const auto& [a, b, alpha] : independent_cases) {
    REQUIRE(check_independence(a, b, alpha).independent);
    Distribution sa = convolve(a, reflect(a));
    Distribution sb = convolve(b, reflect(b));
    CHECK(check_independence(sa, sb, alpha).independent);
  }
}

TEST_CASE("independent nonnegative charfns share a ball where both are 1") {
  std::vector<std::tuple<Distribution, Distribution, PAdicScalar>> independent_cases = {
      {counter_mu1(p3, 2, mpq_class(1, 2)), counter_mu2(p3, 2, mpq_class(1, 2)), PAdicScalar(p3, 9)},
      {haar_ball(p3, -1), haar_ball(p3, -1), PAdicScalar(p3, 2)},
  };
  for (const auto& [a, b, alpha] : independent_cases) {
    REQUIRE(check_independence(a, b, alpha).independent);
    CharFnProfile f = charfn_profile(a);
    CharFnProfile g = charfn_profile(b);
    REQUIRE(f.centered);
    REQUIRE(g.centered);
    VerificationWindow w = verification_window(a, b, alpha);
    bool found = false;
    for (long l = w.lo; l <= w.hi + 1 && !found; ++l)
      found = f.value_at(Valuation(l)) == 1 && g.value_at(Valuation(l)) == 1;
    CHECK(found);
  }
}

TEST_CASE("per-component stripping is not verdict-preserving, translation is") {
  // Two distinct cosets of Lambda_1 mixed half-and-half, against that same
  // ball: dependent, although the shift-stripped pair would be independent.
  Distribution two_cosets(p3, {ball(p3, mpq_class(1, 2), 1, 0), ball(p3, mpq_class(1, 2), 1, 1)});
  PAdicScalar alpha(p3, 2);
  CHECK(!check_independence(two_cosets, haar_ball(p3, 1), alpha).independent);
  CHECK(check_independence(strip_shifts(two_cosets), haar_ball(p3, 1), alpha).independent);
}

TEST_CASE("witnesses violate the original equation even for shifted inputs") {
  std::mt19937_64 rng(54);
  // Dependent configurations with nonzero shifts and atoms; the reported
  // witness must fail the equation for the distributions as given.
  std::vector<std::tuple<Distribution, Distribution, PAdicScalar>> dependent_cases = {
      {Distribution(p3, {ball(p3, mpq_class(1, 2), 1, 0), ball(p3, mpq_class(1, 2), 1, 1)}),
       haar_ball(p3, 1, PAdicScalar::one(p3)), PAdicScalar(p3, 2)},
      {convolve(haar_ball(p3, 0), point_mass(PAdicScalar(p3, mpq_class(1, 3)))),
       haar_ball(p3, 0, PAdicScalar::one(p3)), PAdicScalar(p3, 4)},
      {Distribution(p3, {Component{mpq_class(1, 2), PAdicScalar::zero(p3), BallLevel::infinity()},
                         Component{mpq_class(1, 2), PAdicScalar::one(p3), BallLevel::infinity()}}),
       point_mass(PAdicScalar::zero(p3)), PAdicScalar(p3, 2)},
      {haar_ball(p2, 0), haar_ball(p2, 0, PAdicScalar::one(p2)), PAdicScalar(p2, mpq_class(1, 3))},
  };
  for (const auto& [a, b, alpha] : dependent_cases) {
    IndependenceVerdict v = check_independence(a, b, alpha, std::nullopt, 50);
    REQUIRE(!v.independent);
    REQUIRE(v.witness.has_value());
    CHECK(!functional_equation_holds_at(a, b, alpha, v.witness->first, v.witness->second));
  }
}

TEST_CASE("randomized audit accepts consistent configurations") {
  auto [mu1, mu2] = build_counterexample(p3, 2, mpq_class(1, 2));
  IndependenceVerdict v = check_independence(mu1, mu2, PAdicScalar(p3, 9), std::nullopt, 100);
  CHECK(v.independent);
  CHECK(v.samples_checked == 100);
}

TEST_CASE("window overrides are validated") {
  auto [mu1, mu2] = build_counterexample(p3, 2, mpq_class(1, 2));
  VerificationWindow bad;
  bad.lo = 1;
  bad.hi = 1;
  CHECK_THROWS_AS(check_independence(mu1, mu2, PAdicScalar(p3, 9), bad), std::invalid_argument);
  bad.lo = 1;
  bad.hi = 2;  // misses the low thresholds
  CHECK_THROWS_AS(check_independence(mu1, mu2, PAdicScalar(p3, 9), bad), std::invalid_argument);
  CHECK_THROWS_AS(check_independence(mu1, mu2, PAdicScalar::zero(p3)), std::domain_error);
}
