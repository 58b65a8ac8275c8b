#include <doctest.h>

#include "omegap/config.hpp"
#include "omegap/theorem.hpp"

using namespace omegap;

namespace {

const char* kCounterexampleConfig = R"({
  "p": 3,
  "alpha": "9",
  "mu1": [
    {"weight": "1/2", "kind": "ball", "level": 1, "shift": "0"},
    {"weight": "1/2", "kind": "ball", "level": 0, "shift": "0"}
  ],
  "mu2": [
    {"weight": "1/2", "kind": "ball", "level": 0, "shift": "0"},
    {"weight": "1/2", "kind": "ball", "level": -1, "shift": "0"}
  ]
})";

}  // namespace

TEST_CASE("parse a full instance") {
  Config c = parse_config_text(kCounterexampleConfig);
  CHECK(c.p.value() == 3);
  CHECK(c.alpha.value() == 9);
  CHECK(!c.linear_forms_reduced);
  auto [mu1, mu2] = build_counterexample(Prime(3), 2, mpq_class(1, 2));
  CHECK(same_measure(c.mu1, mu1));
  CHECK(same_measure(c.mu2, mu2));
}

TEST_CASE("distinct diagnostics") {
  CHECK_THROWS_WITH_AS(parse_config_text("{"), doctest::Contains("JSON syntax error"), ConfigError);

  std::string nonprime = kCounterexampleConfig;
  nonprime.replace(nonprime.find("\"p\": 3"), 6, "\"p\": 4");
  CHECK_THROWS_WITH_AS(parse_config_text(nonprime), doctest::Contains("not prime"), ConfigError);

  std::string zero_alpha = kCounterexampleConfig;
  zero_alpha.replace(zero_alpha.find("\"alpha\": \"9\""), 12, "\"alpha\": \"0\"");
  CHECK_THROWS_WITH_AS(parse_config_text(zero_alpha), doctest::Contains("alpha must be nonzero"),
                       ConfigError);

  std::string bad_weights = kCounterexampleConfig;
  bad_weights.replace(bad_weights.find("\"1/2\", \"kind\": \"ball\", \"level\": 1"), 5, "\"1/3\"");
  CHECK_THROWS_WITH_AS(parse_config_text(bad_weights), doctest::Contains("weights sum"), ConfigError);

  CHECK_THROWS_AS(parse_config_text(R"({"p":3,"alpha":"1","mu1":[],"mu2":[]})"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(
                      R"({"p":3,"alpha":"1",
                          "mu1":[{"weight":"1","kind":"blob","shift":"0"}],
                          "mu2":[{"weight":"1","kind":"point","shift":"0"}]})"),
                  ConfigError);
  // A point component must not carry a level.
  CHECK_THROWS_AS(parse_config_text(
                      R"({"p":3,"alpha":"1",
                          "mu1":[{"weight":"1","kind":"point","level":0,"shift":"0"}],
                          "mu2":[{"weight":"1","kind":"point","shift":"0"}]})"),
                  ConfigError);
  // Either alpha or the four coefficients, not both.
  CHECK_THROWS_AS(parse_config_text(
                      R"({"p":3,"alpha":"1","alpha1":"1","alpha2":"1","beta1":"1","beta2":"1",
                          "mu1":[{"weight":"1","kind":"point","shift":"0"}],
                          "mu2":[{"weight":"1","kind":"point","shift":"0"}]})"),
                  ConfigError);
}

TEST_CASE("general linear forms normalize on parse") {
  Config c = parse_config_text(
      R"({"p":5,"alpha1":"2","alpha2":"3","beta1":"1","beta2":"1",
          "mu1":[{"weight":"1","kind":"ball","level":0,"shift":"0"}],
          "mu2":[{"weight":"1","kind":"ball","level":0,"shift":"0"}]})");
  CHECK(c.linear_forms_reduced);
  CHECK(c.alpha.value() == mpq_class(2, 3));
  // mu1 was scaled by 2 (a unit): still the unit ball.
  CHECK(same_measure(c.mu1, haar_ball(Prime(5), 0)));
}

TEST_CASE("emission round-trips to the identical canonical pair") {
  auto [mu1, mu2] = build_counterexample(Prime(3), 2, mpq_class(1, 2));
  std::string text = config_to_json_text(Prime(3), PAdicScalar(Prime(3), 9), mu1, mu2);
  Config c = parse_config_text(text);
  CHECK(same_measure(c.mu1, mu1));
  CHECK(same_measure(c.mu2, mu2));
  // Canonical component lists match exactly.
  Distribution a = canonical(c.mu1), b = canonical(mu1);
  REQUIRE(a.components().size() == b.components().size());
  for (size_t i = 0; i < a.components().size(); ++i) {
    CHECK(a.components()[i].weight == b.components()[i].weight);
    CHECK(a.components()[i].level == b.components()[i].level);
    CHECK(a.components()[i].shift == b.components()[i].shift);
  }
  // Emission is deterministic.
  CHECK(text == config_to_json_text(Prime(3), PAdicScalar(Prime(3), 9), mu1, mu2));
}
