#pragma once

#include <utility>

#include "omegap/angle.hpp"
#include "omegap/scalar.hpp"

namespace omegap {

/// The duality pairing of the p-adic numbers with themselves: the Angle t
/// with (x, y) = exp(2*pi*i*t), computed through the closed form
/// fractional_part(x*y/p). Bi-additive in both arguments, and symmetric
/// under moving a multiplier across the pairing: (a*x, y) = (x, a*y).
Angle pairing(const PAdicScalar& x, const PAdicScalar& y);

/// The same Angle evaluated as the literal double digit sum
///   sum_n x_n * sum_{s >= n} y_{-s} * p^{n-s-1}
/// truncated to the finitely many contributing terms inside the digit
/// window [lo, hi). Kept as an independent second implementation: it is the
/// anti-drift oracle for `pairing`, sharing no code path with it beyond
/// digit extraction.
///
/// Throws std::invalid_argument when the window demonstrably cannot contain
/// all contributing index pairs (valuation bounds violated). For rational
/// inputs, lo <= min(v(x), v(y)) and hi > max(-v(x), -v(y)) is sufficient.
Angle pairing_digit_sum(const PAdicScalar& x, const PAdicScalar& y, long lo, long hi);

/// A sufficient digit window for pairing_digit_sum on these inputs.
std::pair<long, long> pairing_window(const PAdicScalar& x, const PAdicScalar& y);

}  // namespace omegap
