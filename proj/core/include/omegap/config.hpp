#pragma once

#include <string>

#include "omegap/distribution.hpp"
#include "omegap/independence.hpp"

namespace omegap {

/// Raised for anything wrong with user-supplied configuration; the CLI maps
/// it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A problem instance: prime, multiplier, and the two component lists.
/// All numerics travel as exact rational text literals.
///
/// JSON shape:
///   {
///     "p": 3,
///     "alpha": "9",                      // or alpha1/alpha2/beta1/beta2
///     "mu1": [ {"weight":"1/2","kind":"ball","level":1,"shift":"0"}, ... ],
///     "mu2": [ ... ]
///   }
/// A "point" component omits "level". When the four general linear-form
/// coefficients are given instead of "alpha", the instance is normalized to
/// the standard pair and `linear_forms_reduced` is set.
struct Config {
  Prime p;
  PAdicScalar alpha;
  Distribution mu1;
  Distribution mu2;
  bool linear_forms_reduced = false;
};

Config parse_config_text(const std::string& text);
Config parse_config_file(const std::string& path);

/// Canonical JSON text for an instance (stable field order, exact literals).
std::string config_to_json_text(const Prime& p, const PAdicScalar& alpha, const Distribution& mu1,
                                const Distribution& mu2);

}  // namespace omegap
