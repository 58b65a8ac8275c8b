#include "omegap/distribution.hpp"

#include <algorithm>
#include <map>

#include "omegap/pairing.hpp"

namespace omegap {

Distribution::Distribution(Prime prime, std::vector<Component> components)
    : prime_(prime), components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("Distribution: empty component list");
  mpq_class total(0);
  for (const auto& c : components_) {
    if (c.shift.prime() != prime_) throw std::domain_error("Distribution: component prime mismatch");
    if (sgn(c.weight) <= 0) throw std::invalid_argument("Distribution: nonpositive component weight");
    total += c.weight;
  }
  if (total != 1)
    throw std::invalid_argument("Distribution: weights sum to " + total.get_str() + ", expected 1");
}

mpq_class Distribution::atom_mass() const {
  mpq_class m(0);
  for (const auto& c : components_)
    if (c.level.is_infinite()) m += c.weight;
  return m;
}

Distribution make_distribution(Prime prime, std::vector<Component> components) {
  return Distribution(prime, std::move(components));
}

Distribution haar_ball(Prime prime, long level) {
  return haar_ball(prime, level, PAdicScalar::zero(prime));
}

Distribution haar_ball(Prime prime, long level, const PAdicScalar& x) {
  return Distribution(prime, {Component{mpq_class(1), x, BallLevel(level)}});
}

Distribution point_mass(const PAdicScalar& x) {
  return Distribution(x.prime(), {Component{mpq_class(1), x, BallLevel::infinity()}});
}

Distribution canonical(const Distribution& mu) {
  // Key: (level, canonical shift). A ball shift only matters modulo its own
  // ball, so reduce it; a point-mass shift is already exact.
  std::map<std::pair<BallLevel, mpq_class>, mpq_class> merged;
  for (const auto& c : mu.components()) {
    PAdicScalar shift = c.level.is_finite() ? reduce_mod_level(c.shift, c.level.value()) : c.shift;
    merged[{c.level, shift.value()}] += c.weight;
  }
  std::vector<Component> out;
  out.reserve(merged.size());
  for (auto& [key, w] : merged)
    out.push_back(Component{w, PAdicScalar(mu.prime(), key.second), key.first});
  return Distribution(mu.prime(), std::move(out));
}

Distribution convolve(const Distribution& mu, const Distribution& nu) {
  if (mu.prime() != nu.prime()) throw std::domain_error("convolve: mismatched primes");
  std::vector<Component> out;
  out.reserve(mu.components().size() * nu.components().size());
  for (const auto& a : mu.components()) {
    for (const auto& b : nu.components()) {
      out.push_back(Component{a.weight * b.weight, a.shift + b.shift, min(a.level, b.level)});
    }
  }
  return canonical(Distribution(mu.prime(), std::move(out)));
}

Distribution reflect(const Distribution& mu) {
  std::vector<Component> out = mu.components();
  for (auto& c : out) c.shift = -c.shift;
  return Distribution(mu.prime(), std::move(out));
}

Distribution pushforward(const PAdicScalar& beta, const Distribution& mu) {
  if (beta.prime() != mu.prime()) throw std::domain_error("pushforward: mismatched primes");
  if (beta.is_zero()) throw std::domain_error("pushforward: multiplier must be nonzero");
  long vb = valuation(beta).value();
  std::vector<Component> out = mu.components();
  for (auto& c : out) {
    c.shift = beta * c.shift;
    c.level = c.level + BallLevel(vb);  // +inf stays +inf
  }
  return Distribution(mu.prime(), std::move(out));
}

Distribution translate(const Distribution& mu, const PAdicScalar& c) {
  std::vector<Component> out = mu.components();
  for (auto& comp : out) comp.shift = comp.shift + c;
  return Distribution(mu.prime(), std::move(out));
}

Distribution strip_shifts(const Distribution& mu) {
  std::vector<Component> out = mu.components();
  for (auto& c : out) c.shift = PAdicScalar::zero(mu.prime());
  return Distribution(mu.prime(), std::move(out));
}

DensityForm density_at_level(const Distribution& mu, long level) {
  DensityForm out;
  out.level = level;
  std::map<mpq_class, mpq_class> cosets;
  std::map<mpq_class, mpq_class> atoms;
  bool any_ball = false;
  Distribution canon = canonical(mu);
  for (const auto& c : canon.components()) {
    if (c.level.is_infinite()) {
      atoms[c.shift.value()] += c.weight;
      continue;
    }
    any_ball = true;
    long k = c.level.value();
    if (k > level)
      throw std::invalid_argument("density_at_level: level coarser than a component ball");
    // The ball splits into p^{level-k} cosets of Lambda_level, each with an
    // equal share of the weight.
    mpz_class count = pow_p(mu.p(), level - k).get_num();
    mpq_class share = c.weight / mpq_class(count);
    for (mpz_class t = 0; t < count; ++t) {
      PAdicScalar rep =
          reduce_mod_level(c.shift + PAdicScalar(mu.prime(), mpq_class(t) * pow_p(mu.p(), k)), level);
      cosets[rep.value()] += share;
    }
  }
  out.pure_atoms = !any_ball;
  for (auto& [rep, w] : cosets) out.cosets.emplace_back(PAdicScalar(mu.prime(), rep), w);
  for (auto& [x, w] : atoms) out.atoms.emplace_back(PAdicScalar(mu.prime(), x), w);
  return out;
}

DensityForm canonical_density(const Distribution& mu) {
  BallLevel finest(0);
  bool any = false;
  for (const auto& c : mu.components()) {
    if (c.level.is_finite()) {
      finest = any ? max(finest, c.level) : c.level;
      any = true;
    }
  }
  if (!any) {
    DensityForm out = density_at_level(mu, 0);
    out.pure_atoms = true;
    return out;
  }
  return density_at_level(mu, finest.value());
}

namespace {

// Ball-part support {s - s0} forms a full coset of Lambda_{level-j} iff the
// count is p^j and every difference has valuation >= level - j.
bool uniform_single_coset(const DensityForm& d, long p, long* subgroup_level) {
  mpz_class count(static_cast<long>(d.cosets.size()));
  long j = 0;
  mpz_class c = count;
  while (mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(p))) {
    c /= p;
    ++j;
  }
  if (c != 1) return false;
  mpq_class expected = mpq_class(1) / mpq_class(count);
  const PAdicScalar& s0 = d.cosets.front().first;
  for (const auto& [rep, w] : d.cosets) {
    if (w != expected) return false;
    if (rational_valuation(rep.value() - s0.value(), p) < Valuation(d.level - j)) return false;
  }
  if (subgroup_level) *subgroup_level = d.level - j;
  return true;
}

}  // namespace

bool is_idempotent(const Distribution& mu) {
  DensityForm d = canonical_density(mu);
  if (d.pure_atoms) return d.atoms.size() == 1;
  if (!d.atoms.empty()) return false;
  return uniform_single_coset(d, mu.p(), nullptr);
}

bool is_degenerate(const Distribution& mu) {
  DensityForm d = canonical_density(mu);
  return d.pure_atoms && d.atoms.size() == 1;
}

BallLevel idempotent_level(const Distribution& mu) {
  DensityForm d = canonical_density(mu);
  if (d.pure_atoms) {
    if (d.atoms.size() == 1) return BallLevel::infinity();
    throw std::domain_error("idempotent_level: distribution is not idempotent");
  }
  long level = 0;
  if (d.atoms.empty() && uniform_single_coset(d, mu.p(), &level)) return BallLevel(level);
  throw std::domain_error("idempotent_level: distribution is not idempotent");
}

bool same_measure(const Distribution& mu, const Distribution& nu) {
  if (mu.prime() != nu.prime()) throw std::domain_error("same_measure: mismatched primes");
  DensityForm a = canonical_density(mu);
  DensityForm b = canonical_density(nu);
  if (a.pure_atoms != b.pure_atoms) return false;
  auto atoms_equal = [](const DensityForm& x, const DensityForm& y) {
    if (x.atoms.size() != y.atoms.size()) return false;
    for (size_t i = 0; i < x.atoms.size(); ++i) {
      if (x.atoms[i].first.value() != y.atoms[i].first.value()) return false;
      if (x.atoms[i].second != y.atoms[i].second) return false;
    }
    return true;
  };
  if (!atoms_equal(a, b)) return false;
  if (a.pure_atoms) return true;
  long common = std::max(a.level, b.level);
  a = density_at_level(mu, common);
  b = density_at_level(nu, common);
  if (a.cosets.size() != b.cosets.size()) return false;
  for (size_t i = 0; i < a.cosets.size(); ++i) {
    if (a.cosets[i].first.value() != b.cosets[i].first.value()) return false;
    if (a.cosets[i].second != b.cosets[i].second) return false;
  }
  return true;
}

CyclotomicValue charfn_eval(const Distribution& mu, const PAdicScalar& y) {
  if (y.prime() != mu.prime()) throw std::domain_error("charfn_eval: mismatched primes");
  Valuation vy = valuation(y);
  CyclotomicValue sum = CyclotomicValue::zero(mu.prime());
  for (const auto& c : mu.components()) {
    if (c.level.is_finite()) {
      // The Haar factor is the indicator of the annihilator Lambda_{1-k}.
      if (vy < Valuation(1 - c.level.value())) continue;
    }
    sum = sum + CyclotomicValue::root_of_unity(pairing(c.shift, y)).scaled(c.weight);
  }
  return sum;
}

mpq_class CharFnProfile::value_at(const Valuation& v) const {
  mpq_class out = tail;
  for (const auto& [t, inc] : steps) {
    if (Valuation(t) <= v) out += inc;
  }
  return out;
}

size_t CharFnProfile::class_of(const Valuation& v) const {
  size_t c = 0;
  for (const auto& [t, inc] : steps) {
    if (Valuation(t) <= v) ++c;
  }
  return c;
}

mpq_class CharFnProfile::value_of_class(size_t c) const {
  mpq_class out = tail;
  for (size_t i = 0; i < c && i < steps.size(); ++i) out += steps[i].second;
  return out;
}

std::optional<long> CharFnProfile::min_threshold() const {
  if (steps.empty()) return std::nullopt;
  return steps.front().first;
}

std::optional<long> CharFnProfile::max_threshold() const {
  if (steps.empty()) return std::nullopt;
  return steps.back().first;
}

CharFnProfile charfn_profile(const Distribution& mu) {
  CharFnProfile out;
  out.tail = 0;
  std::map<long, mpq_class> steps;
  Distribution canon = canonical(mu);
  for (const auto& c : canon.components()) {
    if (c.level.is_infinite()) {
      out.tail += c.weight;
    } else {
      steps[1 - c.level.value()] += c.weight;
    }
    if (!c.shift.is_zero()) {
      out.centered = false;
      out.shift_change_levels.push_back(1 - valuation(c.shift).value());
    }
  }
  for (auto& [t, inc] : steps) out.steps.emplace_back(t, inc);
  return out;
}

}  // namespace omegap
