#include <doctest.h>

#include "omegap/theorem.hpp"
#include "support.hpp"

using namespace omegap;

namespace {
const Prime p2(2);
const Prime p3(3);
}  // namespace

TEST_CASE("classification by k and the unit residue") {
  TheoremCase c = classify(PAdicScalar(p3, 2));
  CHECK(c.tag == CaseTag::K0Idempotent);
  CHECK(c.k == 0);
  CHECK(c.c0 == 2);

  c = classify(PAdicScalar(p2, -1));
  CHECK(c.tag == CaseTag::K0Degenerate);
  CHECK(c.c0 == 1);

  c = classify(PAdicScalar(p3, 9));
  CHECK(c.tag == CaseTag::KCounterexample);
  CHECK(c.k == 2);
  REQUIRE(c.witnesses.has_value());
  CHECK(check_independence(c.witnesses->first, c.witnesses->second, PAdicScalar(p3, 9)).independent);

  CHECK(classify(PAdicScalar(p3, 3)).tag == CaseTag::K1);
  CHECK(classify(PAdicScalar(p3, mpq_class(1, 3))).tag == CaseTag::K1);
  CHECK(classify(PAdicScalar(p3, mpq_class(1, 9))).tag == CaseTag::KCounterexample);
  CHECK_THROWS_AS(classify(PAdicScalar::zero(p3)), std::domain_error);

  CHECK(to_string(CaseTag::KCounterexample) == "K-counterexample");
}

TEST_CASE("classification is a function of k and the residue only") {
  // Multiplying by a unit with residue 1 never changes the case.
  for (const mpq_class& base : {mpq_class(2), mpq_class(9), mpq_class(1, 3), mpq_class(5)}) {
    PAdicScalar alpha(p3, base);
    CaseTag tag = classify(alpha).tag;
    int c0 = classify(alpha).c0;
    for (const mpq_class& unit : {mpq_class(4), mpq_class(7), mpq_class(10, 7)}) {
      TheoremCase moved = classify(PAdicScalar(p3, base * unit));
      CHECK(moved.tag == tag);
      CHECK(moved.c0 == c0);
    }
  }
}

TEST_CASE("counterexample construction") {
  auto [mu1, mu2] = build_counterexample(p3, 2, mpq_class(1, 2));
  REQUIRE(mu1.components().size() == 2);
  REQUIRE(mu2.components().size() == 2);
  CHECK(mu1.components()[0].level == BallLevel(1));
  CHECK(mu1.components()[1].level == BallLevel(0));
  CHECK(mu2.components()[0].level == BallLevel(0));
  CHECK(mu2.components()[1].level == BallLevel(-1));

  auto [n1, n2] = build_counterexample(p2, 3, mpq_class(1, 2));
  CHECK(n2.components()[0].level == BallLevel(-1));
  CHECK(n2.components()[1].level == BallLevel(-2));

  CHECK_THROWS_AS(build_counterexample(p3, 1, mpq_class(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(build_counterexample(p3, 2, mpq_class(0)), std::invalid_argument);
  CHECK_THROWS_AS(build_counterexample(p3, 2, mpq_class(1)), std::invalid_argument);
  CHECK_THROWS_AS(build_counterexample(p3, 2, mpq_class(3, 2)), std::invalid_argument);
}

TEST_CASE("constructed charfns take the three pinned region values") {
  long k = 2;
  mpq_class a(1, 2);
  auto [mu1, mu2] = build_counterexample(p3, k, a);

  auto value_at = [](const Distribution& mu, const mpq_class& y) {
    return charfn_eval(mu, PAdicScalar(p3, y)).rational_value();
  };

  // f: 1 on Lambda_{k-1}, a on Lambda_0 minus Lambda_{k-1}, 0 outside.
  CHECK(value_at(mu1, pow_p(3, k - 1)) == 1);
  CHECK(value_at(mu1, mpq_class(1)) == a);
  CHECK(value_at(mu1, mpq_class(1, 3)) == 0);

  // g: 1 on Lambda_k, a on Lambda_{k-1} minus Lambda_k, 0 outside Lambda_{k-1}.
  CHECK(value_at(mu2, pow_p(3, k)) == 1);
  CHECK(value_at(mu2, pow_p(3, k - 1)) == a);
  CHECK(value_at(mu2, mpq_class(1)) == 0);

  // Neither mixture is idempotent.
  CHECK(!is_idempotent(mu1));
  CHECK(!is_idempotent(mu2));
}

TEST_CASE("standard family content") {
  std::vector<Distribution> fam3 = standard_family(p3);
  std::vector<Distribution> fam2 = standard_family(p2);
  CHECK(fam3.size() > 30);
  CHECK(fam2.size() > 30);
  // Deduplicated: the shifted copies of low balls merge with the centered ones.
  for (size_t i = 0; i < fam3.size(); ++i) {
    for (size_t j = i + 1; j < fam3.size(); ++j) {
      CHECK(!same_measure(fam3[i], fam3[j]));
    }
  }
  // Contains the counterexample ingredients for k = 2.
  auto [mu1, mu2] = build_counterexample(p3, 2, mpq_class(1, 2));
  bool has_mu1 = false, has_mu2 = false;
  for (const auto& d : fam3) {
    has_mu1 = has_mu1 || same_measure(d, mu1);
    has_mu2 = has_mu2 || same_measure(d, mu2);
  }
  CHECK(has_mu1);
  CHECK(has_mu2);
}

TEST_CASE("verify_case on a trimmed family") {
  // A small but representative slice keeps this unit test quick; the full
  // sweeps live in the acceptance suite.
  std::vector<Distribution> fam = {
      haar_ball(p3, -1), haar_ball(p3, 0), haar_ball(p3, 1),
      haar_ball(p3, 1, PAdicScalar::one(p3)), point_mass(PAdicScalar::zero(p3)),
      point_mass(PAdicScalar::one(p3)),
      Distribution(p3, {Component{mpq_class(1, 2), PAdicScalar::zero(p3), BallLevel(1)},
                        Component{mpq_class(1, 2), PAdicScalar::zero(p3), BallLevel(0)}}),
  };
  auto pairs = family_pairs(fam);

  // Unit with residue 2: every independent pair is an idempotent pair of a
  // common level.
  CaseReport r = verify_case(PAdicScalar(p3, 2), pairs);
  CHECK(r.theorem_case.tag == CaseTag::K0Idempotent);
  CHECK(r.violations == 0);
  CHECK(!r.independent_pairs.empty());

  // Residue-1 unit: only degenerate pairs remain independent.
  r = verify_case(PAdicScalar(p3, 4), pairs);
  CHECK(r.theorem_case.tag == CaseTag::K0Degenerate);
  CHECK(r.violations == 0);
  for (const auto& e : r.independent_pairs) {
    CHECK(is_degenerate(pairs[e.index].first));
    CHECK(is_degenerate(pairs[e.index].second));
  }

  // v(alpha) = 1: at least one idempotent member, and the half-mixture pair
  // shows the bound is tight.
  r = verify_case(PAdicScalar(p3, 3), pairs);
  CHECK(r.theorem_case.tag == CaseTag::K1);
  CHECK(r.violations == 0);
  bool half_mixture_seen = false;
  for (const auto& e : r.independent_pairs) {
    const Distribution& m2 = pairs[e.index].second;
    if (same_measure(pairs[e.index].first, haar_ball(p3, 1)) && !is_idempotent(m2))
      half_mixture_seen = true;
  }
  CHECK(half_mixture_seen);
}

TEST_CASE("named examples carry correct expectations") {
  for (const Prime& p : {p2, p3}) {
    for (const NamedExample& ex : named_examples(p)) {
      CAPTURE(ex.label);
      IndependenceVerdict v = check_independence(ex.mu1, ex.mu2, ex.alpha);
      CHECK(v.independent == ex.expect_independent);
      CHECK(is_idempotent(ex.mu1) == ex.expect_mu1_idempotent);
      CHECK(is_idempotent(ex.mu2) == ex.expect_mu2_idempotent);
    }
  }
  // The sum/difference pair over the 2-adics is dependent...
  bool found = false;
  for (const NamedExample& ex : named_examples(p2)) {
    if (ex.label == "kac-bernstein-haar-pair") {
      CHECK(!ex.expect_independent);
      found = true;
    }
  }
  CHECK(found);
  // ...and independent over the 3-adics.
  for (const NamedExample& ex : named_examples(p3)) {
    if (ex.label == "kac-bernstein-haar-pair") CHECK(ex.expect_independent);
  }
}
