#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "omegap/cyclotomic.hpp"
#include "omegap/extint.hpp"
#include "omegap/scalar.hpp"

namespace omegap {

/// One mixture component: weight * (Haar on shift + Lambda_level), where a
/// finite level k names the ball p^k * Delta_p and level +inf degenerates to
/// the point mass at `shift`. Point masses are just the +inf end of the
/// ball family, so convolution and pushforward need no special kind.
struct Component {
  mpq_class weight;
  PAdicScalar shift;
  BallLevel level;
};

/// A finite convex mixture of shifted ball Haar measures and point masses.
/// Weights are exact positive rationals summing to 1.
class Distribution {
 public:
  Distribution(Prime prime, std::vector<Component> components);

  const Prime& prime() const { return prime_; }
  long p() const { return prime_.value(); }
  const std::vector<Component>& components() const { return components_; }

  /// Total weight of point-mass components.
  mpq_class atom_mass() const;
  bool has_atoms() const { return sgn(atom_mass()) != 0; }

 private:
  Prime prime_;
  std::vector<Component> components_;
};

Distribution make_distribution(Prime prime, std::vector<Component> components);

/// Convenience constructors.
Distribution haar_ball(Prime prime, long level);                        // m_{Lambda_level}
Distribution haar_ball(Prime prime, long level, const PAdicScalar& x);  // m_{x + Lambda_level}
Distribution point_mass(const PAdicScalar& x);                          // E_x

/// Merge components sharing (level, shift coset), reduce ball shifts to
/// canonical coset representatives, and sort ascending by (level, shift).
/// The measure is unchanged.
Distribution canonical(const Distribution& mu);

/// Convolution: balls add shifts and keep the coarser level; a point mass
/// is absorbed by any ball; two point masses add.
Distribution convolve(const Distribution& mu, const Distribution& nu);

/// The reflected distribution mu(-E): negates all shifts. Its
/// characteristic function is the complex conjugate.
Distribution reflect(const Distribution& mu);

/// Image under multiplication by beta != 0: shifts multiply by beta, ball
/// levels move by v(beta), point masses stay point masses.
Distribution pushforward(const PAdicScalar& beta, const Distribution& mu);

/// mu convolved with the point mass at c (a pure translation).
Distribution translate(const Distribution& mu, const PAdicScalar& c);

/// All shifts set to zero; weights and levels unchanged.
Distribution strip_shifts(const Distribution& mu);

/// Exact probabilities of the cosets of Lambda_level meeting the ball part
/// of the support, plus the exact atom list. `level` defaults to the finest
/// finite component level.
struct DensityForm {
  bool pure_atoms = false;
  long level = 0;  // meaningful when the ball part is nonempty
  std::vector<std::pair<PAdicScalar, mpq_class>> cosets;  // (canonical rep, mass)
  std::vector<std::pair<PAdicScalar, mpq_class>> atoms;   // (point, mass)
};

DensityForm canonical_density(const Distribution& mu);
DensityForm density_at_level(const Distribution& mu, long level);

/// Idempotent = a shift of the Haar distribution of a compact subgroup.
/// On the p-adic numbers those subgroups are exactly the balls Lambda_k and
/// {0}, so: a single shifted ball, or a single point mass. Decided on the
/// canonical density, so syntactically different presentations of the same
/// measure agree.
bool is_idempotent(const Distribution& mu);
bool is_degenerate(const Distribution& mu);

/// Level of the underlying subgroup of an idempotent distribution
/// (+inf for a point mass). Throws when mu is not idempotent.
BallLevel idempotent_level(const Distribution& mu);

/// Exact equality as measures (presentation-independent).
bool same_measure(const Distribution& mu, const Distribution& nu);

/// Exact characteristic function value
///   mu_hat(y) = sum_j a_j * e(pairing(x_j, y)) * [v(y) >= 1 - k_j]
/// with point-mass components contributing unconditionally; mu_hat(0) = 1.
CyclotomicValue charfn_eval(const Distribution& mu, const PAdicScalar& y);

/// Step data of the characteristic function as a function of v(y).
///
/// For a centered distribution (all canonical shifts zero) the exact value
/// at y is value_at(v(y)), a rational: the step function with jumps at the
/// annihilator levels 1 - k_j and tail equal to the point-mass weight. For
/// non-centered distributions the steps still locate every level where the
/// component activity pattern changes, and `shift_change_levels` adds the
/// levels above which each character factor becomes trivial.
struct CharFnProfile {
  mpq_class tail;                                  // value as v(y) -> -inf (atom mass)
  std::vector<std::pair<long, mpq_class>> steps;   // sorted (threshold, added weight)
  std::vector<long> shift_change_levels;           // 1 - v(shift) per nonzero canonical shift
  bool centered = true;

  mpq_class value_at(const Valuation& v) const;
  /// Index of the step interval containing v: the number of thresholds <= v.
  size_t class_of(const Valuation& v) const;
  /// Value on step class c (tail + the first c increments).
  mpq_class value_of_class(size_t c) const;

  std::optional<long> min_threshold() const;
  std::optional<long> max_threshold() const;
};

CharFnProfile charfn_profile(const Distribution& mu);

}  // namespace omegap
