#include "assembly.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "interior.hpp"

namespace hoburg {

namespace {

using R = Rational;

const std::vector<std::pair<int, R>>& diffusion_pattern(int k) {
  static const std::vector<std::pair<int, R>> p1{{-1, 1}, {0, -2}, {1, 1}};
  static const std::vector<std::pair<int, R>> p2{{-2, 1}, {-1, -4}, {0, 6}, {1, -4}, {2, 1}};
  static const std::vector<std::pair<int, R>> p3{{-3, 1}, {-2, -6}, {-1, 15}, {0, -20},
                                                 {1, 15},  {2, -6},  {3, 1}};
  switch (k) {
    case 1: return p1;
    case 2: return p2;
    case 3: return p3;
  }
  throw std::invalid_argument("diffusion bracket order must be 1..3");
}

const std::vector<std::pair<int, R>>& advection_pattern(int k) {
  static const std::vector<std::pair<int, R>> p1{{-1, -1}, {1, 1}};
  static const std::vector<std::pair<int, R>> p2{{-2, -1}, {-1, 2}, {1, -2}, {2, 1}};
  switch (k) {
    case 1: return p1;
    case 2: return p2;
  }
  throw std::invalid_argument("advection bracket order must be 1 or 2");
}

BandedMatrix<R> bracket_matrix(const ClosureBlock& left_block,
                               const ClosureBlock& right_block,
                               const std::vector<std::pair<int, R>>& pattern, int m) {
  if (m < 7) throw std::invalid_argument("bracket matrix needs m >= 7");
  std::vector<BandRowSpec<R>> rows;
  for (int r = 0; r < 3; ++r) {
    BandRowSpec<R> spec;
    spec.row = r;
    const auto& lrow = left_block.rows[r];
    for (int c = 0; c < static_cast<int>(lrow.size()); ++c) {
      if (!lrow[c].is_zero()) spec.entries.emplace_back(c - r, lrow[c]);
    }
    rows.push_back(std::move(spec));

    BandRowSpec<R> mirror_spec;
    mirror_spec.row = m - 1 - r;
    const auto& rrow = right_block.rows[r];
    for (int c = 0; c < static_cast<int>(rrow.size()); ++c) {
      if (!rrow[c].is_zero()) mirror_spec.entries.emplace_back(r - c, rrow[c]);
    }
    rows.push_back(std::move(mirror_spec));
  }
  return band_from_rows(rows, pattern, m);
}

void require_block(const ClosureBlock& b, const char* what) {
  if (b.rows[0].empty() && b.rows[1].empty() && b.rows[2].empty()) {
    throw std::invalid_argument(std::string(what) + " bracket absent at this order");
  }
}

ClosureTables build_left_tables(BoundaryKind kind, TruncationOrder order) {
  return kind == BoundaryKind::dirichlet_gridpoint ? dirichlet_closure(order)
                                                   : neumann_midpoint_closure(order);
}

}  // namespace

double left_boundary_coordinate(BoundaryKind kind, double x_origin, double h) {
  return kind == BoundaryKind::dirichlet_gridpoint ? x_origin - h : x_origin - 0.5 * h;
}

double right_boundary_coordinate(BoundaryKind kind, double x_origin, double h, int m) {
  double x_last = x_origin + (m - 1) * h;
  return kind == BoundaryKind::dirichlet_gridpoint ? x_last + h : x_last + 0.5 * h;
}

BandedMatrix<R> diffusion_bracket_matrix(const ClosureTables& left,
                                         const ClosureTables& right, int k, int m) {
  require_block(left.diffusion[k - 1], "diffusion");
  require_block(right.diffusion[k - 1], "diffusion");
  return bracket_matrix(left.diffusion[k - 1], right.diffusion[k - 1],
                        diffusion_pattern(k), m);
}

BandedMatrix<R> advection_bracket_matrix(const ClosureTables& left,
                                         const ClosureTables& right, int k, int m) {
  require_block(left.advection[k - 1], "advection");
  require_block(right.advection[k - 1], "advection");
  const auto& base = advection_pattern(k);
  // The right closure carries the u -> -u sign flip, so the interior pattern
  // continues unchanged from the left frame.
  return bracket_matrix(left.advection[k - 1], right.advection[k - 1], base, m);
}

BandedMatrix<R> stabilisation_bracket_matrix(const ClosureTables& left,
                                             const ClosureTables& right, int m) {
  return bracket_matrix(left.stabilisation, right.stabilisation, diffusion_pattern(1), m);
}

HolisticOperator::HolisticOperator(DomainConfig config)
    : HolisticOperator(config, build_left_tables(config.left.kind, config.order),
                       build_left_tables(config.right.kind, config.order)) {}

HolisticOperator::HolisticOperator(DomainConfig config, const ClosureTables& left_tables,
                                   const ClosureTables& right_tables)
    : config_(std::move(config)),
      left_(apply_consistency_corrections(left_tables)),
      right_(mirror_closure(apply_consistency_corrections(right_tables))),
      diffusion_scaled_(1, 1, 0, 0),
      advection_scaled_(1, 1, 0, 0),
      diffusion_dimensionless_(1, 1, 0, 0) {
  if (config_.m < 7) throw std::invalid_argument("domain needs at least 7 grid points");
  if (config_.h <= 0.0) throw std::invalid_argument("spacing must be positive");
  if (!(config_.gamma >= 0.0 && config_.gamma <= 1.0)) {
    throw std::invalid_argument("coupling gamma must lie in [0, 1]");
  }
  if (left_.kind != config_.left.kind || left_.side != Side::left) {
    throw std::invalid_argument("left closure tables do not match the configuration");
  }
  if (right_.kind != config_.right.kind || right_.side != Side::right) {
    throw std::invalid_argument("right closure tables do not match the configuration");
  }
  if (!(left_.order == config_.order) || !(right_.order == config_.order)) {
    throw std::invalid_argument("closure tables built at a different truncation order");
  }
  build_matrices();
}

void HolisticOperator::build_matrices() {
  const int m = config_.m;
  const int p = config_.order.p();
  const double g = config_.gamma;
  const double h = config_.h;
  const R qd[3] = {R(1), R(-1, 12), R(1, 90)};
  const R qa[2] = {R(1, 2), R(-1, 12)};

  BandedMatrix<double> diff(m, m, p, p);
  double gk = g;
  for (int k = 1; k <= p; ++k, gk *= g) {
    auto bracket = diffusion_bracket_matrix(left_, right_, k, m);
    for (int i = 0; i < m; ++i) {
      for (int j = std::max(0, i - k); j <= std::min(m - 1, i + k); ++j) {
        R entry = qd[k - 1] * bracket.at(i, j);
        if (!entry.is_zero()) diff.add(i, j, gk * entry.to_double());
      }
    }
  }
  diffusion_dimensionless_ = diff;

  BandedMatrix<double> diff_scaled(m, m, p, p);
  for (int i = 0; i < m; ++i) {
    for (int j = std::max(0, i - p); j <= std::min(m - 1, i + p); ++j) {
      diff_scaled.set(i, j, diff.at(i, j) / (h * h));
    }
  }
  diffusion_scaled_ = diff_scaled;

  const int pa = std::min(p, 2);
  BandedMatrix<double> adv(m, m, pa, pa);
  gk = g;
  for (int k = 1; k <= pa; ++k, gk *= g) {
    auto bracket = advection_bracket_matrix(left_, right_, k, m);
    for (int i = 0; i < m; ++i) {
      for (int j = std::max(0, i - k); j <= std::min(m - 1, i + k); ++j) {
        R entry = qa[k - 1] * bracket.at(i, j);
        if (!entry.is_zero()) adv.add(i, j, gk * entry.to_double() / h);
      }
    }
  }
  advection_scaled_ = adv;
}

std::vector<double> HolisticOperator::rhs(std::span<const double> u, double t) const {
  const int m = config_.m;
  if (static_cast<int>(u.size()) != m) {
    throw std::invalid_argument("state length does not match the grid");
  }
  const double h = config_.h;
  const double g = config_.gamma;

  std::vector<double> out(static_cast<size_t>(m), 0.0);

  auto left_rows = boundary_rhs(left_, config_.left.signal, u.first(6), t, h, g);
  out[0] = left_rows[0];
  out[1] = left_rows[1];
  out[2] = left_rows[2];

  for (int j = 3; j <= m - 4; ++j) {
    out[j] = interior_rhs(u.subspan(j - 3, 7), h, g, config_.order);
  }

  std::array<double, 6> tail;
  for (int s = 0; s < 6; ++s) tail[s] = u[m - 1 - s];
  auto right_rows = boundary_rhs(right_, config_.right.signal, tail, t, h, g);
  out[m - 1] = right_rows[0];
  out[m - 2] = right_rows[1];
  out[m - 3] = right_rows[2];

  return out;
}

std::vector<double> HolisticOperator::rhs(const GridField& u, double t) const {
  return rhs(std::span<const double>(u.values), t);
}

double HolisticOperator::spectral_bound() const {
  const auto& d = diffusion_dimensionless_;
  const int n = d.rows();
  std::vector<double> v(static_cast<size_t>(n));
  std::mt19937 rng(20020905u);
  for (auto& x : v) x = static_cast<double>(rng() % 2001) / 1000.0 - 1.0;

  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  if (norm == 0.0) v[0] = 1.0;
  else
    for (auto& x : v) x /= norm;

  double estimate = 0.0;
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<double> w = d.multiply_vector(v);
    double wn = 0.0;
    for (double x : w) wn += x * x;
    wn = std::sqrt(wn);
    if (wn < 1e-300) return 0.0;
    estimate = wn;
    for (size_t i = 0; i < w.size(); ++i) v[i] = w[i] / wn;
  }
  return 1.1 * estimate;
}

}  // namespace hoburg
