// omegap: exact distributions on the p-adic numbers and an exact decision
// procedure for independence of the linear forms xi1 + xi2 and
// xi1 + alpha*xi2.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "omegap/config.hpp"
#include "omegap/oracle.hpp"
#include "omegap/theorem.hpp"

using nlohmann::json;
using namespace omegap;

namespace {

json dist_to_json(const Distribution& mu) {
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
  return arr;
}

std::string dist_to_text(const Distribution& mu) {
  std::string out;
  Distribution canon = canonical(mu);
  for (const auto& c : canon.components()) {
    if (!out.empty()) out += " + ";
    out += c.weight.get_str();
    if (c.level.is_finite()) {
      out += "*m[";
      if (!c.shift.is_zero()) out += c.shift.to_string() + "+";
      out += "L(" + std::to_string(c.level.value()) + ")]";
    } else {
      out += "*E[" + c.shift.to_string() + "]";
    }
  }
  return out;
}

json window_to_json(const VerificationWindow& w) {
  json j;
  j["lo"] = w.lo;
  j["hi"] = w.hi;
  j["classes"] = w.class_count().get_str();
  j["pairs"] = w.pair_count().get_str();
  j["deep_probe_levels"] = w.deep_probe_levels;
  return j;
}

json verdict_to_json(const IndependenceVerdict& v) {
  json j;
  j["independent"] = v.independent;
  j["method"] = v.method;
  j["window"] = window_to_json(v.window);
  j["pairs_evaluated"] = v.pairs_evaluated;
  j["samples_checked"] = v.samples_checked;
  j["negative_k_reduced"] = v.negative_k_reduced;
  if (v.witness) {
    j["witness"] = {{"u", v.witness->first.to_string()}, {"v", v.witness->second.to_string()}};
  } else {
    j["witness"] = nullptr;
  }
  if (v.method == "oracle") j["faithful"] = v.oracle_faithful;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

void print_verdict_text(const IndependenceVerdict& v) {
  std::cout << "verdict: " << (v.independent ? "independent" : "dependent") << "  (method "
            << v.method << ")\n";
  std::cout << "window: [" << v.window.lo << ", " << v.window.hi << ")  classes "
            << v.window.class_count().get_str() << "  worst-case pairs "
            << v.window.pair_count().get_str() << "  evaluated " << v.pairs_evaluated << "\n";
  if (v.negative_k_reduced)
    std::cout << "note: v(alpha) < 0 was normalized by swapping the two forms\n";
  if (v.samples_checked > 0) std::cout << "randomized audit: " << v.samples_checked << " samples\n";
  if (v.witness) {
    std::cout << "witness: u = " << v.witness->first.to_string()
              << ", v = " << v.witness->second.to_string() << "\n";
  }
  if (!v.note.empty()) std::cout << "note: " << v.note << "\n";
}

json cyclotomic_to_json(const CyclotomicValue& v) {
  json j;
  j["order_exponent"] = v.order();
  mpz_class modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(v.prime().value()),
                static_cast<unsigned long>(v.order()));
  json terms = json::array();
  for (const auto& [e, c] : v.coefficients()) {
    json t;
    t["coeff"] = c.get_str();
    mpq_class angle(e, modulus);
    angle.canonicalize();
    t["angle"] = angle.get_str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

int cmd_classify(long p_raw, const std::string& alpha_text, bool as_json) {
  Prime p(p_raw);
  PAdicScalar alpha = PAdicScalar::parse(alpha_text, p);
  if (alpha.is_zero()) throw ConfigError("alpha must be nonzero");
  TheoremCase c = classify(alpha);
  if (as_json) {
    json j;
    j["command"] = "classify";
    j["p"] = p.value();
    j["alpha"] = alpha.to_string();
    j["k"] = c.k;
    j["c0"] = c.c0;
    j["case"] = to_string(c.tag);
    j["conclusion"] = c.conclusion;
    if (c.witnesses) {
      j["witnesses"] = {{"mu1", dist_to_json(c.witnesses->first)},
                        {"mu2", dist_to_json(c.witnesses->second)}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "case " << to_string(c.tag) << ", k=" << c.k << ", c0=" << c.c0 << "\n";
    std::cout << c.conclusion << "\n";
    if (c.witnesses) {
      std::cout << "witness mu1: " << dist_to_text(c.witnesses->first) << "\n";
      std::cout << "witness mu2: " << dist_to_text(c.witnesses->second) << "\n";
    }
  }
  return 0;
}

int cmd_check(const std::string& config_path, bool with_oracle, long samples, long margin_low,
              bool as_json) {
  Config cfg = parse_config_file(config_path);
  IndependenceVerdict v =
      check_independence(cfg.mu1, cfg.mu2, cfg.alpha, std::nullopt, samples, margin_low);

  std::optional<IndependenceVerdict> ov;
  if (with_oracle) ov = oracle_check(cfg.mu1, cfg.mu2, cfg.alpha);

  if (as_json) {
    json j;
    j["command"] = "check";
    j["p"] = cfg.p.value();
    j["alpha"] = cfg.alpha.to_string();
    j["linear_forms_reduced"] = cfg.linear_forms_reduced;
    j["mu1"] = dist_to_json(cfg.mu1);
    j["mu2"] = dist_to_json(cfg.mu2);
    j["result"] = verdict_to_json(v);
    if (ov) {
      j["oracle"] = verdict_to_json(*ov);
      j["agreement"] = (ov->independent == v.independent);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    if (cfg.linear_forms_reduced)
      std::cout << "note: general linear forms normalized, alpha = " << cfg.alpha.to_string()
                << "\n";
    print_verdict_text(v);
    if (ov) {
      std::cout << "--- oracle cross-check ---\n";
      print_verdict_text(*ov);
      std::cout << (ov->independent == v.independent ? "oracle agrees\n" : "ORACLE DISAGREES\n");
    }
  }
  return 0;
}

int cmd_counterexample(long p_raw, long k, const std::string& a_text, const std::string& out_path,
                       bool with_oracle, bool as_json) {
  Prime p(p_raw);
  mpq_class a = PAdicScalar::parse(a_text, p).value();
  auto [mu1, mu2] = build_counterexample(p, k, a);
  PAdicScalar alpha(p, pow_p(p.value(), k));

  std::string text = config_to_json_text(p, alpha, mu1, mu2);
  std::ofstream out(out_path);
  if (!out) throw ConfigError("cannot write '" + out_path + "'");
  out << text;
  out.close();

  IndependenceVerdict v = check_independence(mu1, mu2, alpha);
  std::optional<IndependenceVerdict> ov;
  if (with_oracle) ov = oracle_check(mu1, mu2, alpha);
  bool non_idempotent = !is_idempotent(mu1) && !is_idempotent(mu2);

  if (as_json) {
    json j;
    j["command"] = "counterexample";
    j["p"] = p.value();
    j["k"] = k;
    j["a"] = a.get_str();
    j["alpha"] = alpha.to_string();
    j["config_path"] = out_path;
    j["mu1"] = dist_to_json(mu1);
    j["mu2"] = dist_to_json(mu2);
    j["result"] = verdict_to_json(v);
    j["both_non_idempotent"] = non_idempotent;
    if (ov) {
      j["oracle"] = verdict_to_json(*ov);
      j["agreement"] = (ov->independent == v.independent);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "wrote " << out_path << "\n";
    std::cout << "mu1: " << dist_to_text(mu1) << "\n";
    std::cout << "mu2: " << dist_to_text(mu2) << "\n";
    std::cout << "alpha = " << alpha.to_string() << "\n";
    print_verdict_text(v);
    std::cout << (non_idempotent ? "both components non-idempotent\n"
                                 : "WARNING: an idempotent component\n");
    if (ov) {
      std::cout << "--- oracle cross-check ---\n";
      print_verdict_text(*ov);
      std::cout << (ov->independent == v.independent ? "oracle agrees\n" : "ORACLE DISAGREES\n");
    }
  }
  return 0;
}

int cmd_charfn(const std::string& config_path, const std::string& at_text, bool as_json) {
  Config cfg = parse_config_file(config_path);
  PAdicScalar y = PAdicScalar::parse(at_text, cfg.p);
  CyclotomicValue v1 = charfn_eval(cfg.mu1, y);
  CyclotomicValue v2 = charfn_eval(cfg.mu2, y);
  if (as_json) {
    json j;
    j["command"] = "charfn";
    j["p"] = cfg.p.value();
    j["at"] = y.to_string();
    j["mu1_hat"] = cyclotomic_to_json(v1);
    j["mu2_hat"] = cyclotomic_to_json(v2);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "mu1_hat(" << y.to_string() << ") = " << v1.to_string() << "\n";
    std::cout << "mu2_hat(" << y.to_string() << ") = " << v2.to_string() << "\n";
  }
  return 0;
}

int cmd_oracle(const std::string& config_path, std::optional<long> level, bool as_json) {
  Config cfg = parse_config_file(config_path);
  std::optional<OracleWindow> w;
  if (level) {
    OracleWindow base = oracle_window(cfg.mu1, cfg.mu2, cfg.alpha);
    if (*level <= base.lo) throw ConfigError("--level must exceed the support level");
    w = OracleWindow{base.lo, *level};
  }
  IndependenceVerdict v = oracle_check(cfg.mu1, cfg.mu2, cfg.alpha, w);
  if (as_json) {
    json j;
    j["command"] = "oracle";
    j["p"] = cfg.p.value();
    j["alpha"] = cfg.alpha.to_string();
    j["result"] = verdict_to_json(v);
    std::cout << j.dump(2) << "\n";
  } else {
    print_verdict_text(v);
  }
  return 0;
}

int cmd_harness(long p_raw, bool as_json) {
  Prime p(p_raw);
  json claims = json::array();
  size_t failures = 0;

  auto claim = [&](const std::string& label, bool pass, const std::string& detail) {
    if (!as_json)
      std::cout << (pass ? "[PASS] " : "[FAIL] ") << label << (detail.empty() ? "" : ": " + detail)
                << "\n";
    json c;
    c["label"] = label;
    c["pass"] = pass;
    if (!detail.empty()) c["detail"] = detail;
    claims.push_back(std::move(c));
    if (!pass) ++failures;
  };

  for (const NamedExample& ex : named_examples(p)) {
    IndependenceVerdict v = check_independence(ex.mu1, ex.mu2, ex.alpha);
    bool ok = v.independent == ex.expect_independent &&
              is_idempotent(ex.mu1) == ex.expect_mu1_idempotent &&
              is_idempotent(ex.mu2) == ex.expect_mu2_idempotent;
    claim("named-example " + ex.label + " (alpha=" + ex.alpha.to_string() + ")", ok,
          v.independent ? "independent" : "dependent");
  }

  std::vector<Distribution> family = standard_family(p);
  auto pairs = family_pairs(family);
  std::vector<PAdicScalar> alphas;
  alphas.emplace_back(p, 1 + p.value());          // k=0, residue 1
  if (p.value() > 2) alphas.emplace_back(p, 2);   // k=0, residue != 1
  alphas.emplace_back(p, -1);                     // sum/difference pair
  alphas.emplace_back(p, p.value());              // |k| = 1
  if (p.value() > 2) alphas.emplace_back(p, 2 * p.value());
  alphas.emplace_back(p, p.value() * p.value());  // |k| = 2

  for (const PAdicScalar& alpha : alphas) {
    CaseReport r = verify_case(alpha, pairs);
    claim("case " + to_string(r.theorem_case.tag) + " conclusion over family (alpha=" +
              alpha.to_string() + ")",
          r.violations == 0,
          std::to_string(r.independent_pairs.size()) + " independent pairs of " +
              std::to_string(r.pairs_checked) + ", " + std::to_string(r.violations) +
              " violations");
  }

  if (as_json) {
    json j;
    j["command"] = "harness";
    j["p"] = p.value();
    j["family_size"] = family.size();
    j["claims"] = std::move(claims);
    j["failures"] = failures;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (failures == 0 ? "all claims pass" : std::to_string(failures) + " claims FAILED")
              << " (family size " << family.size() << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact independence checking for linear forms of p-adic random variables"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output (deterministic)");

  long p_raw = 0;
  std::string alpha_text, config_path, at_text, a_text = "1/2";
  std::string out_path = "counterexample.json";
  long k = 2, samples = 0, margin_low = 2;
  bool with_oracle = false;
  std::optional<long> level;

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify a multiplier alpha");
  classify_cmd->add_option("-p,--prime", p_raw, "prime p")->required();
  classify_cmd->add_option("--alpha", alpha_text, "rational multiplier")->required();

  CLI::App* check_cmd = app.add_subcommand("check", "decide independence for a config");
  check_cmd->add_option("--config", config_path, "instance file (JSON)")->required();
  check_cmd->add_flag("--oracle", with_oracle, "cross-check with the quotient oracle");
  check_cmd->add_option("--sample", samples, "extra randomized audit pairs");
  check_cmd->add_option("--margin-low", margin_low, "extra depth below the lowest threshold");

  CLI::App* counter_cmd =
      app.add_subcommand("counterexample", "emit and verify a non-idempotent independent pair");
  counter_cmd->add_option("-p,--prime", p_raw, "prime p")->required();
  counter_cmd->add_option("-k", k, "valuation of alpha, |k| >= 2")->required();
  counter_cmd->add_option("-a", a_text, "mixture weight in (0,1)");
  counter_cmd->add_option("-o,--output", out_path, "output config path");
  counter_cmd->add_flag("--oracle", with_oracle, "cross-check with the quotient oracle");

  CLI::App* charfn_cmd = app.add_subcommand("charfn", "evaluate both characteristic functions");
  charfn_cmd->add_option("--config", config_path, "instance file (JSON)")->required();
  charfn_cmd->add_option("--at", at_text, "evaluation point (rational)")->required();

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "quotient joint-law verdict");
  oracle_cmd->add_option("--config", config_path, "instance file (JSON)")->required();
  oracle_cmd->add_option("--level", level, "override the quotient depth (W_high)");

  CLI::App* harness_cmd =
      app.add_subcommand("harness", "run the classification family sweeps and named examples");
  harness_cmd->add_option("-p,--prime", p_raw, "prime p")->required();

  // Let a trailing --json reach the parent app.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classify_cmd) return cmd_classify(p_raw, alpha_text, as_json);
    if (*check_cmd) return cmd_check(config_path, with_oracle, samples, margin_low, as_json);
    if (*counter_cmd) return cmd_counterexample(p_raw, k, a_text, out_path, with_oracle, as_json);
    if (*charfn_cmd) return cmd_charfn(config_path, at_text, as_json);
    if (*oracle_cmd) return cmd_oracle(config_path, level, as_json);
    if (*harness_cmd) return cmd_harness(p_raw, as_json);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
