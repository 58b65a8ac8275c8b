#include "omegap/independence.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace omegap {

namespace {

long vp_mpz(const mpz_class& z, long p) {
  mpz_class tmp;
  mpz_class pz(p);
  return static_cast<long>(mpz_remove(tmp.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t()));
}

struct Elem {
  mpq_class value;
  Valuation val;
  bool on_grid;      // value = U * p^lo with integer U
  mpz_class grid_u;  // meaningful when on_grid
};

std::vector<Elem> enumerate_elements(long p, const VerificationWindow& w, bool with_probes) {
  std::vector<Elem> out;
  mpz_class n = w.class_count();
  mpq_class scale = pow_p(p, w.lo);
  for (mpz_class u = 0; u < n; ++u) {
    Elem e;
    e.on_grid = true;
    e.grid_u = u;
    e.value = mpq_class(u) * scale;
    e.val = (u == 0) ? Valuation::infinity() : Valuation(w.lo + vp_mpz(u, p));
    out.push_back(std::move(e));
  }
  if (with_probes) {
    for (int j = 1; j <= w.deep_probe_levels; ++j) {
      for (long r = 1; r < p; ++r) {
        Elem e;
        e.on_grid = false;
        e.value = mpq_class(r) * pow_p(p, w.lo - j);
        e.val = Valuation(w.lo - j);
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

// Collect every level where a characteristic function changes form.
void collect_thresholds(const CharFnProfile& prof, std::vector<long>& out) {
  for (const auto& [t, inc] : prof.steps) out.push_back(t);
  for (long t : prof.shift_change_levels) out.push_back(t);
}

VerificationWindow window_from_profiles(const CharFnProfile& f, const CharFnProfile& g, long p,
                                        const PAdicScalar& alpha, long margin_low) {
  if (margin_low < 1) throw std::invalid_argument("verification_window: margin_low must be >= 1");
  std::vector<long> ts;
  collect_thresholds(f, ts);
  collect_thresholds(g, ts);
  long t_min = 1, t_max = 1;
  if (!ts.empty()) {
    t_min = *std::min_element(ts.begin(), ts.end());
    t_max = *std::max_element(ts.begin(), ts.end());
  }
  long k = valuation(alpha).value();
  VerificationWindow w;
  w.p = p;
  w.hi = t_max;
  w.lo = t_min - margin_low - std::max(0L, -k);
  return w;
}

mpq_class random_unit(std::mt19937_64& rng, long p) {
  std::uniform_int_distribution<long> d(1, 512);
  long a = d(rng);
  long b = d(rng);
  while (a % p == 0) a = d(rng);
  while (b % p == 0) b = d(rng);
  mpq_class q(a, b);
  q.canonicalize();
  if (rng() & 1) q = -q;
  return q;
}

PAdicScalar random_scalar_with_valuation(std::mt19937_64& rng, Prime prime, long val_lo, long val_hi) {
  std::uniform_int_distribution<long> dv(val_lo, val_hi);
  long v = dv(rng);
  return PAdicScalar(prime, random_unit(rng, prime.value()) * pow_p(prime.value(), v));
}

// Exact evaluator with memoized per-argument characteristic function values.
class Eq3Evaluator {
 public:
  Eq3Evaluator(const Distribution& mu1, const Distribution& mu2, const PAdicScalar& alpha)
      : mu1_(mu1), mu2_(mu2), alpha_(alpha) {}

  bool holds(const mpq_class& u, const mpq_class& v) {
    mpq_class av = alpha_.value() * v;
    CyclotomicValue lhs = eval(mu1_, cache1_, u + v) * eval(mu2_, cache2_, u + av);
    CyclotomicValue rhs = eval(mu1_, cache1_, u) * eval(mu2_, cache2_, u) *
                          eval(mu1_, cache1_, v) * eval(mu2_, cache2_, av);
    return lhs == rhs;
  }

 private:
  const CyclotomicValue& eval(const Distribution& mu, std::map<mpq_class, CyclotomicValue>& cache,
                              const mpq_class& arg) {
    auto it = cache.find(arg);
    if (it != cache.end()) return it->second;
    auto [pos, inserted] = cache.emplace(arg, charfn_eval(mu, PAdicScalar(mu.prime(), arg)));
    return pos->second;
  }

  const Distribution& mu1_;
  const Distribution& mu2_;
  const PAdicScalar& alpha_;
  std::map<mpq_class, CyclotomicValue> cache1_;
  std::map<mpq_class, CyclotomicValue> cache2_;
};

// Step-function evaluator for centered inputs: both sides of the equation
// depend only on the step classes of the five argument valuations, so each
// distinct class pattern is decided once with exact rationals.
class CenteredEq3Evaluator {
 public:
  CenteredEq3Evaluator(const CharFnProfile& f, const CharFnProfile& g)
      : f_(f), g_(g) {
    nf_ = f.steps.size() + 1;
    ng_ = g.steps.size() + 1;
    fv_.reserve(nf_);
    for (size_t c = 0; c < nf_; ++c) fv_.push_back(f.value_of_class(c));
    gv_.reserve(ng_);
    for (size_t c = 0; c < ng_; ++c) gv_.push_back(g.value_of_class(c));
    memo_.assign(nf_ * ng_ * nf_ * ng_ * nf_ * ng_, -1);
  }

  bool holds(const Valuation& v_uv, const Valuation& v_uav, const Valuation& v_u,
             const Valuation& v_v, const Valuation& v_av) {
    size_t key = f_.class_of(v_uv);
    key = key * ng_ + g_.class_of(v_uav);
    key = key * nf_ + f_.class_of(v_u);
    key = key * ng_ + g_.class_of(v_u);
    key = key * nf_ + f_.class_of(v_v);
    key = key * ng_ + g_.class_of(v_av);
    int8_t& slot = memo_[key];
    if (slot < 0) {
      size_t k = key;
      size_t c_gav = k % ng_; k /= ng_;
      size_t c_fv = k % nf_; k /= nf_;
      size_t c_gu = k % ng_; k /= ng_;
      size_t c_fu = k % nf_; k /= nf_;
      size_t c_guav = k % ng_; k /= ng_;
      size_t c_fuv = k;
      mpq_class lhs = fv_[c_fuv] * gv_[c_guav];
      mpq_class rhs = fv_[c_fu] * gv_[c_gu] * fv_[c_fv] * gv_[c_gav];
      slot = (lhs == rhs) ? 1 : 0;
    }
    return slot == 1;
  }

 private:
  const CharFnProfile& f_;
  const CharFnProfile& g_;
  size_t nf_, ng_;
  std::vector<mpq_class> fv_, gv_;
  std::vector<int8_t> memo_;
};

Distribution strip_global_translation(const Distribution& mu) {
  Distribution c = canonical(mu);
  // Prefer a translation that centers every component; such a translation
  // exists iff all components share one shift coset. Otherwise fall back to
  // centering the first component.
  auto centers_all = [&c](const PAdicScalar& cand) {
    for (const auto& comp : c.components()) {
      PAdicScalar moved = comp.shift - cand;
      if (comp.level.is_finite()) {
        if (!reduce_mod_level(moved, comp.level.value()).is_zero()) return false;
      } else if (!moved.is_zero()) {
        return false;
      }
    }
    return true;
  };
  for (const auto& comp : c.components()) {
    if (centers_all(comp.shift)) {
      if (comp.shift.is_zero()) return c;
      return canonical(translate(c, -comp.shift));
    }
  }
  const PAdicScalar& first = c.components().front().shift;
  if (first.is_zero()) return c;
  return canonical(translate(c, -first));
}

}  // namespace

mpz_class VerificationWindow::class_count() const {
  mpz_class n;
  mpz_ui_pow_ui(n.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(hi - lo));
  return n;
}

mpz_class VerificationWindow::pair_count() const {
  mpz_class n = class_count();
  return n * n;
}

VerificationWindow verification_window(const Distribution& mu1, const Distribution& mu2,
                                       const PAdicScalar& alpha, long margin_low) {
  if (alpha.is_zero()) throw std::domain_error("verification_window: alpha must be nonzero");
  CharFnProfile f = charfn_profile(mu1);
  CharFnProfile g = charfn_profile(mu2);
  return window_from_profiles(f, g, mu1.p(), alpha, margin_low);
}

CanonicalForms canonicalize_forms(const PAdicScalar& alpha1, const PAdicScalar& alpha2,
                                  const PAdicScalar& beta1, const PAdicScalar& beta2,
                                  const Distribution& mu1, const Distribution& mu2) {
  for (const PAdicScalar* c : {&alpha1, &alpha2, &beta1, &beta2}) {
    if (c->is_zero()) throw std::domain_error("canonicalize_forms: zero coefficient");
  }
  PAdicScalar alpha = (beta2 * alpha1) / (beta1 * alpha2);
  return CanonicalForms{alpha, pushforward(alpha1, mu1), pushforward(alpha2, mu2)};
}

bool ball_pair_independent(const PAdicScalar& alpha, BallLevel level) {
  if (alpha.is_zero()) throw std::domain_error("ball_pair_independent: alpha must be nonzero");
  if (level.is_infinite()) return true;
  mpq_class one_minus(1 - alpha.value());
  return rational_valuation(one_minus, alpha.p()) <= Valuation(0);
}

bool functional_equation_holds_at(const Distribution& mu1, const Distribution& mu2,
                                  const PAdicScalar& alpha, const PAdicScalar& u,
                                  const PAdicScalar& v) {
  Eq3Evaluator eval(mu1, mu2, alpha);
  return eval.holds(u.value(), v.value());
}

IndependenceVerdict check_independence(const Distribution& mu1, const Distribution& mu2,
                                       const PAdicScalar& alpha,
                                       std::optional<VerificationWindow> window, long sample_count,
                                       long margin_low) {
  if (mu1.prime() != mu2.prime() || alpha.prime() != mu1.prime())
    throw std::domain_error("check_independence: mismatched primes");
  if (alpha.is_zero()) throw std::domain_error("check_independence: alpha must be nonzero");
  long p = mu1.p();

  IndependenceVerdict verdict;

  // v(alpha) < 0: swap the roles of the two forms. (mu1, mu2, alpha) and
  // (mu1, alpha*mu2, 1/alpha) describe the same pair of linear forms, and a
  // witness (u, v) for the normalized problem is a witness (v, u) for the
  // original.
  Distribution work1 = canonical(mu1);
  Distribution work2 = canonical(mu2);
  PAdicScalar alpha_eff = alpha;
  if (valuation(alpha) < Valuation(0)) {
    work2 = canonical(pushforward(alpha, work2));
    alpha_eff = PAdicScalar::one(alpha.prime()) / alpha;
    verdict.negative_k_reduced = true;
  }

  // A global translation multiplies both sides of the equation by the same
  // nonzero character, so it never changes the verdict. Per-component
  // shifts are NOT removable and stay in the exact evaluation below.
  work1 = strip_global_translation(work1);
  work2 = strip_global_translation(work2);

  CharFnProfile f = charfn_profile(work1);
  CharFnProfile g = charfn_profile(work2);

  VerificationWindow w;
  if (window) {
    w = *window;
    if (w.lo >= w.hi) throw std::invalid_argument("check_independence: window lo must be < hi");
    std::vector<long> ts;
    collect_thresholds(f, ts);
    collect_thresholds(g, ts);
    if (!ts.empty()) {
      long t_min = *std::min_element(ts.begin(), ts.end());
      long t_max = *std::max_element(ts.begin(), ts.end());
      if (w.hi < t_max || w.lo > t_min - 1)
        throw std::invalid_argument("check_independence: window inconsistent with distributions");
    }
    w.p = p;
  } else {
    w = window_from_profiles(f, g, p, alpha_eff, margin_low);
  }
  verdict.window = w;

  if (w.hi - w.lo > 40 || w.class_count() > mpz_class(1) << 24)
    throw std::runtime_error("check_independence: window too large to enumerate");

  bool tails = sgn(f.tail) != 0 || sgn(g.tail) != 0;
  std::vector<Elem> elems = enumerate_elements(p, w, tails);

  long k = valuation(alpha_eff).value();
  mpq_class unit = alpha_eff.value() / pow_p(p, k);
  mpz_class unit_num = unit.get_num();
  mpz_class unit_den = unit.get_den();
  mpz_class pk = pow_p(p, k).get_num();

  bool fast = f.centered && g.centered;
  std::optional<CenteredEq3Evaluator> fast_eval;
  std::optional<Eq3Evaluator> exact_eval;
  if (fast)
    fast_eval.emplace(f, g);
  else
    exact_eval.emplace(work1, work2, alpha_eff);

  auto record_witness = [&](const mpq_class& u, const mpq_class& v) {
    PAdicScalar wu(mu1.prime(), u);
    PAdicScalar wv(mu1.prime(), v);
    // Undo the v(alpha) < 0 normalization: the forms were swapped.
    if (verdict.negative_k_reduced) std::swap(wu, wv);
    verdict.independent = false;
    verdict.witness = std::make_pair(wu, wv);
  };

  for (const Elem& a : elems) {
    if (verdict.witness) break;
    for (const Elem& b : elems) {
      ++verdict.pairs_evaluated;
      bool ok;
      if (fast) {
        Valuation v_uv, v_uav;
        if (a.on_grid && b.on_grid) {
          mpz_class s = a.grid_u + b.grid_u;
          v_uv = (s == 0) ? Valuation::infinity() : Valuation(w.lo + vp_mpz(s, p));
          mpz_class t = a.grid_u * unit_den + pk * unit_num * b.grid_u;
          v_uav = (t == 0) ? Valuation::infinity() : Valuation(w.lo + vp_mpz(t, p));
        } else {
          v_uv = rational_valuation(a.value + b.value, p);
          v_uav = rational_valuation(a.value + alpha_eff.value() * b.value, p);
        }
        Valuation v_av = b.val + Valuation(k);
        ok = fast_eval->holds(v_uv, v_uav, a.val, b.val, v_av);
      } else {
        ok = exact_eval->holds(a.value, b.value);
      }
      if (!ok) {
        record_witness(a.value, b.value);
        break;
      }
    }
  }

  // Randomized audit: extra rational pairs beyond the grid, exact equation
  // evaluation. Deterministic stream.
  if (!verdict.witness && sample_count > 0) {
    std::mt19937_64 rng(0x00C0FFEEuL);
    Eq3Evaluator audit(work1, work2, alpha_eff);
    for (long i = 0; i < sample_count; ++i) {
      PAdicScalar u = random_scalar_with_valuation(rng, mu1.prime(), w.lo - 3, w.hi + 3);
      PAdicScalar v = random_scalar_with_valuation(rng, mu1.prime(), w.lo - 3, w.hi + 3);
      ++verdict.samples_checked;
      if (!audit.holds(u.value(), v.value())) {
        record_witness(u.value(), v.value());
        break;
      }
    }
  }

  return verdict;
}

}  // namespace omegap
