#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace hoburg {

/// Grid samples u_1..u_m with uniform spacing h; x_origin is the coordinate
/// of the first grid point.
struct GridField {
  std::vector<double> values;
  double h = 1.0;
  double x_origin = 0.0;

  GridField() = default;
  GridField(std::vector<double> v, double spacing, double origin)
      : values(std::move(v)), h(spacing), x_origin(origin) {
    if (h <= 0.0) throw std::invalid_argument("grid spacing must be positive");
    if (values.empty()) throw std::invalid_argument("grid field needs at least one value");
  }

  int size() const { return static_cast<int>(values.size()); }
  double x(int j) const { return x_origin + j * h; }  // 0-based index
};

}  // namespace hoburg
