#pragma once

#include <stdexcept>

namespace omegap {

/// A prime number p >= 2, checked by trial division at construction.
class Prime {
 public:
  explicit Prime(long p) : p_(p) {
    if (p < 2) throw std::invalid_argument("Prime: p must be >= 2");
    for (long d = 2; d * d <= p; ++d) {
      if (p % d == 0) throw std::invalid_argument("Prime: " + std::to_string(p) + " is not prime");
    }
  }

  long value() const { return p_; }

  friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Prime& a, const Prime& b) { return a.p_ != b.p_; }

 private:
  long p_;
};

}  // namespace omegap
