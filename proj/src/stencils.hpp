#pragma once

#include <span>
#include <stdexcept>

namespace hoburg {

/// The centred difference operators used throughout the discretisation.
/// mu_delta is the centred first difference (mu*delta), delta2 the second
/// difference, and so on; delta6 needs a 7-point window.
enum class CentredOp { mu_delta, delta2, mu_delta3, delta4, delta6 };

constexpr int stencil_reach(CentredOp op) {
  switch (op) {
    case CentredOp::mu_delta:
    case CentredOp::delta2:
      return 1;
    case CentredOp::mu_delta3:
    case CentredOp::delta4:
      return 2;
    case CentredOp::delta6:
      return 3;
  }
  return 0;
}

// The higher operators are composed from second differences rather than
// expanded into their weights; the composition annihilates constant (and for
// the odd operators, mirror-symmetric) data exactly in floating point.
template <typename T>
T centred_difference(CentredOp op, std::span<const T> w, int centre) {
  int r = stencil_reach(op);
  if (centre - r < 0 || centre + r >= static_cast<int>(w.size())) {
    throw std::invalid_argument("window too narrow for centred difference");
  }
  const int c = centre;
  auto d2 = [&w](int i) { return w[i - 1] - T{2} * w[i] + w[i + 1]; };
  switch (op) {
    case CentredOp::mu_delta:
      return (w[c + 1] - w[c - 1]) / T{2};
    case CentredOp::delta2:
      return d2(c);
    case CentredOp::mu_delta3:
      return (d2(c + 1) - d2(c - 1)) / T{2};
    case CentredOp::delta4:
      return d2(c - 1) - T{2} * d2(c) + d2(c + 1);
    case CentredOp::delta6: {
      T a = d2(c - 2) - T{2} * d2(c - 1) + d2(c);
      T b = d2(c - 1) - T{2} * d2(c) + d2(c + 1);
      T e = d2(c) - T{2} * d2(c + 1) + d2(c + 2);
      return a - T{2} * b + e;
    }
  }
  throw std::invalid_argument("unknown centred operator");
}

inline double centred_difference(CentredOp op, std::span<const double> w, int centre) {
  return centred_difference<double>(op, w, centre);
}

}  // namespace hoburg
