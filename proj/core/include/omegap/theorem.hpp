#pragma once

#include <string>
#include <vector>

#include "omegap/independence.hpp"
#include "omegap/oracle.hpp"

namespace omegap {

/// Classification of the multiplier alpha = p^k * c by k and the residue
/// c mod p, with the structural conclusion forced on every independent pair
/// (mu1, mu2):
///   K0-degenerate      k = 0, c = 1 mod p: both degenerate.
///   K0-idempotent      k = 0, c != 1 mod p: both shifted Haar measures of
///                      one common ball (or both degenerate).
///   K1                 |k| = 1: at least one idempotent.
///   K-counterexample   |k| >= 2: no structural conclusion; independent
///                      pairs with both components non-idempotent exist and
///                      constructed witnesses are attached.
enum class CaseTag { K0Degenerate, K0Idempotent, K1, KCounterexample };

std::string to_string(CaseTag tag);

struct TheoremCase {
  long k = 0;
  int c0 = 1;  // residue of the unit part mod p
  CaseTag tag = CaseTag::K0Degenerate;
  std::string conclusion;
  std::optional<std::pair<Distribution, Distribution>> witnesses;
};

TheoremCase classify(const PAdicScalar& alpha);

/// For |k| >= 2 and 0 < a < 1: the mixture pair
///   mu1 = a * m_{Lambda_1}      + (1-a) * m_{Lambda_{2-k}}
///   mu2 = a * m_{Lambda_{2-k}}  + (1-a) * m_{Lambda_{1-k}}
/// is independent under every alpha with v(alpha) = k, and neither
/// component is idempotent. Negative k is normalized through the
/// form-swapping symmetry before the construction.
std::pair<Distribution, Distribution> build_counterexample(Prime prime, long k,
                                                           const mpq_class& a);

/// The documented finite falsification family: single balls with levels in
/// {-1, 0, 1} and shifts in {0, 1}, the point masses at 0 and 1, and all
/// two-component mixtures of those with first weight in {1/4, 1/2, 3/4}.
std::vector<Distribution> standard_family(Prime prime);

/// All ordered pairs from the family.
std::vector<std::pair<Distribution, Distribution>> family_pairs(const std::vector<Distribution>& family);

/// Sweep the given pairs: every pair flagged independent must satisfy the
/// classified case's conclusion. Assertion failures are reported, never
/// thrown. For the counterexample case the conclusion is vacuous.
struct CaseReport {
  struct Entry {
    size_t index;  // position in the swept pair list
    bool conclusion_holds;
    std::string detail;
  };
  TheoremCase theorem_case;
  size_t pairs_checked = 0;
  std::vector<Entry> independent_pairs;
  size_t violations = 0;
};

CaseReport verify_case(const PAdicScalar& alpha,
                       const std::vector<std::pair<Distribution, Distribution>>& pairs);

/// Curated instances with pinned expectations, used by the harness and the
/// acceptance suite.
struct NamedExample {
  std::string label;
  PAdicScalar alpha;
  Distribution mu1;
  Distribution mu2;
  bool expect_independent;
  bool expect_mu1_idempotent;
  bool expect_mu2_idempotent;
};

std::vector<NamedExample> named_examples(Prime prime);

}  // namespace omegap
