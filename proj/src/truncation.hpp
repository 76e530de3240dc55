#pragma once

#include <stdexcept>

namespace hoburg {

/// Truncation order p in the inter-element coupling parameter.  p selects
/// how many coupling orders of each term family are retained: diffusion up
/// to order p, advection up to order min(p, 2), the quadratic interaction
/// from order 2 on, and the cubic stabilisation term from order 1 on.
class TruncationOrder {
 public:
  explicit TruncationOrder(int p) : p_(p) {
    if (p < 1 || p > 3) throw std::invalid_argument("truncation order must be 1, 2 or 3");
  }
  int p() const { return p_; }

  friend bool operator==(TruncationOrder a, TruncationOrder b) { return a.p_ == b.p_; }

 private:
  int p_;
};

}  // namespace hoburg
