#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace omegap {

/// Integer extended with +infinity.
///
/// Used for p-adic valuations (v(0) = +inf) and for ball levels, where
/// level +inf denotes the trivial subgroup {0} (a point mass). Infinity is
/// a dedicated state, never a sentinel integer.
class ExtInt {
 public:
  constexpr ExtInt() : finite_(0), infinite_(false) {}
  constexpr ExtInt(long v) : finite_(v), infinite_(false) {}  // NOLINT: implicit by design

  static constexpr ExtInt infinity() {
    ExtInt e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  long value() const {
    if (infinite_) throw std::domain_error("ExtInt: infinity has no finite value");
    return finite_;
  }

  // Addition: infinity absorbs. (Both operands infinite is fine; there is
  // no -infinity in this lattice, so no indeterminate forms arise.)
  ExtInt operator+(const ExtInt& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return ExtInt(finite_ + o.finite_);
  }
  ExtInt operator-() const {
    if (infinite_) throw std::domain_error("ExtInt: cannot negate infinity");
    return ExtInt(-finite_);
  }

  friend constexpr bool operator==(const ExtInt& a, const ExtInt& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.finite_ == b.finite_;
  }
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return a.finite_ <=> b.finite_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(finite_); }

 private:
  long finite_;
  bool infinite_;
};

inline ExtInt min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }
inline ExtInt max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

/// v(x) in the valuation lattice.
using Valuation = ExtInt;

/// The ball Lambda_k = p^k * Delta_p; +inf denotes {0}.
/// Lambda_k contains Lambda_m iff k <= m.
using BallLevel = ExtInt;

}  // namespace omegap
