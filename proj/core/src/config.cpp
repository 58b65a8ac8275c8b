#include "omegap/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace omegap {

namespace {

using nlohmann::json;

std::string require_string(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string())
    throw ConfigError(std::string("config: missing or non-string field '") + field + "'");
  return j[field].get<std::string>();
}

PAdicScalar parse_scalar_field(const json& j, const char* field, Prime p) {
  try {
    return PAdicScalar::parse(require_string(j, field), p);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: field '") + field + "': " + e.what());
  }
}

Distribution parse_components(const json& j, const char* field, Prime p) {
  if (!j.contains(field) || !j[field].is_array() || j[field].empty())
    throw ConfigError(std::string("config: '") + field + "' must be a nonempty component array");
  std::vector<Component> comps;
  for (const json& cj : j[field]) {
    if (!cj.is_object()) throw ConfigError(std::string("config: '") + field + "': component must be an object");
    std::string kind = require_string(cj, "kind");
    mpq_class weight;
    try {
      weight = PAdicScalar::parse(require_string(cj, "weight"), p).value();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("config: bad weight: ") + e.what());
    }
    PAdicScalar shift = parse_scalar_field(cj, "shift", p);
    BallLevel level = BallLevel::infinity();
    if (kind == "ball") {
      if (!cj.contains("level") || !cj["level"].is_number_integer())
        throw ConfigError("config: ball component requires an integer 'level'");
      level = BallLevel(cj["level"].get<long>());
    } else if (kind == "point") {
      if (cj.contains("level")) throw ConfigError("config: point component must not carry 'level'");
    } else {
      throw ConfigError("config: component kind must be \"ball\" or \"point\", got \"" + kind + "\"");
    }
    comps.push_back(Component{weight, shift, level});
  }
  try {
    return Distribution(p, std::move(comps));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: '") + field + "': " + e.what());
  }
}

}  // namespace

Config parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: JSON syntax error: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  if (!j.contains("p") || !j["p"].is_number_integer())
    throw ConfigError("config: missing integer field 'p'");
  Prime p = [&] {
    try {
      return Prime(j["p"].get<long>());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
  }();

  Distribution mu1 = parse_components(j, "mu1", p);
  Distribution mu2 = parse_components(j, "mu2", p);

  bool has_alpha = j.contains("alpha");
  bool has_forms = j.contains("alpha1") || j.contains("alpha2") || j.contains("beta1") || j.contains("beta2");
  if (has_alpha == has_forms)
    throw ConfigError("config: give either 'alpha' or all of alpha1/alpha2/beta1/beta2");

  if (has_alpha) {
    PAdicScalar alpha = parse_scalar_field(j, "alpha", p);
    if (alpha.is_zero()) throw ConfigError("config: alpha must be nonzero");
    return Config{p, alpha, std::move(mu1), std::move(mu2), false};
  }

  PAdicScalar a1 = parse_scalar_field(j, "alpha1", p);
  PAdicScalar a2 = parse_scalar_field(j, "alpha2", p);
  PAdicScalar b1 = parse_scalar_field(j, "beta1", p);
  PAdicScalar b2 = parse_scalar_field(j, "beta2", p);
  for (const PAdicScalar* c : {&a1, &a2, &b1, &b2}) {
    if (c->is_zero()) throw ConfigError("config: linear-form coefficients must be nonzero");
  }
  CanonicalForms cf = canonicalize_forms(a1, a2, b1, b2, mu1, mu2);
  return Config{p, cf.alpha, std::move(cf.mu1), std::move(cf.mu2), true};
}

Config parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string config_to_json_text(const Prime& p, const PAdicScalar& alpha, const Distribution& mu1,
                                const Distribution& mu2) {
  json j;
  j["p"] = p.value();
  j["alpha"] = alpha.to_string();
  for (const char* name : {"mu1", "mu2"}) {
    const Distribution& mu = (std::string(name) == "mu1") ? mu1 : mu2;
    json arr = json::array();
    Distribution canon = canonical(mu);
    for (const auto& c : canon.components()) {
      json cj;
      cj["weight"] = c.weight.get_str();
      if (c.level.is_finite()) {
        cj["kind"] = "ball";
        cj["level"] = c.level.value();
      } else {
        cj["kind"] = "point";
      }
      cj["shift"] = c.shift.to_string();
      arr.push_back(std::move(cj));
    }
    j[name] = std::move(arr);
  }
  return j.dump(2) + "\n";
}

}  // namespace omegap
